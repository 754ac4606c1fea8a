"""Domain types and validated constructors.

Two qubits of interest (S1, S2) interact with each other and with a
finite register of environment qubits through sigma-z couplings only.
Everything here is an immutable value object; the time evolution lives
in :mod:`qubitbath.dynamics`.

Basis convention: two-qubit states are indexed 00, 01, 10, 11, flattened
as ``i = 2*l + m`` for S1 bit ``l`` and S2 bit ``m``.  All frequencies and
couplings are angular frequencies in units of an arbitrary reference
(hbar = 1), and must be nonnegative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import sample_white_noise

NORM_TOL = 1e-12  # amplitude normalization slack (double-precision headroom)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _require_finite(name: str, z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must have finite components, got {z!r}")


def _require_nonnegative(name: str, x: float) -> None:
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"{name} must be finite and >= 0, got {x!r}")


def _require_count(name: str, n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")


@dataclass(frozen=True)
class SystemParams:
    """Frequencies of the two-qubit system: self-frequencies and their coupling."""

    omega_s1: float
    omega_s2: float
    omega_s1s2: float

    def __post_init__(self):
        _require_nonnegative("omega_s1", self.omega_s1)
        _require_nonnegative("omega_s2", self.omega_s2)
        _require_nonnegative("omega_s1s2", self.omega_s1s2)


@dataclass(frozen=True)
class EnvQubit:
    """One bath qubit: couplings to S1/S2, self-frequency, initial amplitudes.

    A mutual-bath qubit has both couplings nonzero; a distinct-bath qubit
    couples to exactly one system qubit.  ``omega_e`` is retained for a
    faithful Hamiltonian but cancels out of the reduced dynamics.
    """

    gamma_s1: float
    gamma_s2: float
    alpha: complex = INV_SQRT2
    beta: complex = INV_SQRT2
    omega_e: float = 0.0

    def __post_init__(self):
        _require_nonnegative("gamma_s1", self.gamma_s1)
        _require_nonnegative("gamma_s2", self.gamma_s2)
        if not math.isfinite(self.omega_e):
            raise ValueError(f"omega_e must be finite, got {self.omega_e!r}")
        _require_finite("alpha", self.alpha)
        _require_finite("beta", self.beta)
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm!r} is not 1 within {NORM_TOL}")


@dataclass(frozen=True)
class EnvironmentSpec:
    """Ordered register of bath qubits; empty means a closed two-qubit system."""

    qubits: tuple[EnvQubit, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))

    def __len__(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class ProductState:
    """Separable pure state (a0_1|0> + a1_1|1>) x (a0_2|0> + a1_2|1>)."""

    a0_1: complex
    a1_1: complex
    a0_2: complex
    a1_2: complex

    def __post_init__(self):
        for name in ("a0_1", "a1_1", "a0_2", "a1_2"):
            _require_finite(name, getattr(self, name))
        for pair, label in (((self.a0_1, self.a1_1), "qubit 1"), ((self.a0_2, self.a1_2), "qubit 2")):
            norm = abs(pair[0]) ** 2 + abs(pair[1]) ** 2
            if abs(norm - 1.0) > NORM_TOL:
                raise ValueError(f"{label} amplitudes have norm^2 = {norm!r}, not 1 within {NORM_TOL}")

    def two_qubit_amplitudes(self) -> np.ndarray:
        """Four product amplitudes a_lm = a_l^(1) a_m^(2) in basis order 00,01,10,11."""
        return np.array(
            [self.a0_1 * self.a0_2, self.a0_1 * self.a1_2,
             self.a1_1 * self.a0_2, self.a1_1 * self.a1_2],
            dtype=complex,
        )


#: Which computational-basis pair carries the Bell projector of a Werner-like state.
WERNER_VARIANTS = ("w0011", "w0110")


@dataclass(frozen=True)
class WernerLikeState:
    """Bell projector mixed with white noise: lambda * |e><e| + (1-lambda)/4 * I.

    ``variant`` selects the Bell pair: "w0011" superposes |00>,|11>;
    "w0110" superposes |01>,|10>.  The +/- sign of the superposition does
    not enter the density matrix, so it is not represented.
    """

    variant: str
    purity: float

    def __post_init__(self):
        if self.variant not in WERNER_VARIANTS:
            raise ValueError(f"variant must be one of {WERNER_VARIANTS}, got {self.variant!r}")
        if not (math.isfinite(self.purity) and 0.0 <= self.purity <= 1.0):
            raise ValueError(f"purity must lie in [0, 1], got {self.purity!r}")


InitialState = ProductState | WernerLikeState


def make_unbiased_ps() -> ProductState:
    """Product state with all four single-qubit amplitudes equal to 1/sqrt(2)."""
    return ProductState(INV_SQRT2, INV_SQRT2, INV_SQRT2, INV_SQRT2)


def initial_coefficients(state: InitialState) -> np.ndarray:
    """4x4 coefficient matrix A with A[lm][no] multiplying |lm><no| at t = 0.

    For a product state A[i][j] = a_i * conj(a_j); for a Werner-like state
    A is the X-structured matrix with diagonal ((1-L)/4 + L/2 on the Bell
    pair) and L/2 on the matching anti-diagonal corner pair.
    """
    if isinstance(state, ProductState):
        amps = state.two_qubit_amplitudes()
        return np.outer(amps, amps.conj())
    if isinstance(state, WernerLikeState):
        lam = state.purity
        if not 0.0 <= lam <= 1.0:
            raise ValueError(f"purity must lie in [0, 1], got {lam!r}")
        a = np.zeros((4, 4), dtype=complex)
        off = (1.0 - lam) / 4.0
        on = off + lam / 2.0
        if state.variant == "w0011":
            a[0, 0] = a[3, 3] = on
            a[1, 1] = a[2, 2] = off
            a[0, 3] = a[3, 0] = lam / 2.0
        else:
            a[1, 1] = a[2, 2] = on
            a[0, 0] = a[3, 3] = off
            a[1, 2] = a[2, 1] = lam / 2.0
        return a
    raise TypeError(f"unsupported initial state {type(state).__name__}")


def _env_amplitudes(alpha: complex | None, beta: complex | None) -> tuple[complex, complex]:
    if alpha is None and beta is None:
        return INV_SQRT2, INV_SQRT2
    if alpha is None or beta is None:
        raise ValueError("alpha and beta must be given together")
    return alpha, beta


def homogeneous_mutual(n: int, gamma: float, alpha: complex | None = None,
                       beta: complex | None = None) -> EnvironmentSpec:
    """n bath qubits, each coupled to both system qubits with strength gamma."""
    _require_count("n", n)
    _require_nonnegative("gamma", gamma)
    a, b = _env_amplitudes(alpha, beta)
    return EnvironmentSpec(tuple(EnvQubit(gamma, gamma, a, b) for _ in range(n)))


def white_noise_mutual(n: int, mu: float, f: float, seed: int,
                       alpha: complex | None = None, beta: complex | None = None) -> EnvironmentSpec:
    """n mutual bath qubits whose couplings are drawn from [|mu-f|, mu+f].

    Each qubit consumes two consecutive draws from the seeded stream:
    first its coupling to S1, then its coupling to S2.
    """
    _require_count("n", n)
    a, b = _env_amplitudes(alpha, beta)
    draws = sample_white_noise(mu, f, seed, 2 * n)
    return EnvironmentSpec(tuple(
        EnvQubit(draws[2 * k], draws[2 * k + 1], a, b) for k in range(n)
    ))


def distinct_homogeneous(n1: int, gamma_s1: float, n2: int, gamma_s2: float,
                         alpha: complex | None = None, beta: complex | None = None) -> EnvironmentSpec:
    """Two separate homogeneous baths: n1 qubits on S1 only, n2 on S2 only."""
    _require_count("n1", n1)
    _require_count("n2", n2)
    _require_nonnegative("gamma_s1", gamma_s1)
    _require_nonnegative("gamma_s2", gamma_s2)
    a, b = _env_amplitudes(alpha, beta)
    bath1 = tuple(EnvQubit(gamma_s1, 0.0, a, b) for _ in range(n1))
    bath2 = tuple(EnvQubit(0.0, gamma_s2, a, b) for _ in range(n2))
    return EnvironmentSpec(bath1 + bath2)


def distinct_case1(n1: int, n2: int, gamma_s2: float, m: float,
                   alpha: complex | None = None, beta: complex | None = None) -> EnvironmentSpec:
    """Distinct homogeneous baths with the S1 strength slaved to S2: gamma_s1 = m * gamma_s2."""
    _require_nonnegative("m", m)
    _require_nonnegative("gamma_s2", gamma_s2)
    return distinct_homogeneous(n1, m * gamma_s2, n2, gamma_s2, alpha, beta)


def mixed(n1: int, gamma_s1: float, n2: int, mu: float, f: float, seed: int,
          alpha: complex | None = None, beta: complex | None = None) -> EnvironmentSpec:
    """Homogeneous bath of n1 qubits on S1 plus a white-noise bath of n2 qubits on S2."""
    _require_count("n1", n1)
    _require_count("n2", n2)
    _require_nonnegative("gamma_s1", gamma_s1)
    a, b = _env_amplitudes(alpha, beta)
    bath1 = tuple(EnvQubit(gamma_s1, 0.0, a, b) for _ in range(n1))
    draws = sample_white_noise(mu, f, seed, n2)
    bath2 = tuple(EnvQubit(0.0, g, a, b) for g in draws)
    return EnvironmentSpec(bath1 + bath2)


_ENV_KINDS = {
    "homogeneous_mutual": homogeneous_mutual,
    "white_noise_mutual": white_noise_mutual,
    "distinct_homogeneous": distinct_homogeneous,
    "distinct_case1": distinct_case1,
    "mixed": mixed,
}


def make_environment(kind: str, **params) -> EnvironmentSpec:
    """Dispatch to one of the named environment constructors by kind string."""
    try:
        builder = _ENV_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown environment kind {kind!r}; expected one of {sorted(_ENV_KINDS)}") from None
    return builder(**params)


def validate_density_matrix(rho: np.ndarray, *, herm_tol: float = 1e-10,
                            trace_tol: float = 1e-10, eig_floor: float = -1e-9) -> np.ndarray:
    """Check the 4x4 density-matrix invariants; returns rho unchanged.

    Raises ValueError on non-Hermitian entries beyond ``herm_tol``, trace
    away from 1 beyond ``trace_tol``, or an eigenvalue below ``eig_floor``.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError("density matrix has non-finite entries")
    asym = np.max(np.abs(rho - rho.conj().T))
    if asym > herm_tol:
        raise ValueError(f"density matrix is not Hermitian (asymmetry {asym:.3e})")
    tr = rho.trace()
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace {tr!r} is not 1 within {trace_tol}")
    lowest = min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)))
    if lowest < eig_floor:
        raise ValueError(f"density matrix eigenvalue {lowest:.3e} below {eig_floor}")
    return rho
