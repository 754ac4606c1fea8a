"""Brute-force ground truth: evolve the full composite system, then trace.

The Hamiltonian is diagonal in the computational product basis, so exact
evolution is a phase per basis string, no matrix exponentials needed.  A
composite basis index packs the bits as (S1, S2, E1 ... EN) with S1 most
significant, i.e. index = (2 l + m) * 2^N + (environment bits).

This module is deliberately simple and allocation-heavy; it exists to
validate the closed forms in :mod:`qubitbath.dynamics`, never to be fast.
"""

from __future__ import annotations

import numpy as np

from .model import EnvironmentSpec, InitialState, ProductState, SystemParams, WernerLikeState

#: Largest environment the oracle will materialize (2^(N+2) amplitudes).
MAX_ENV_QUBITS = 24

_SQRT_HALF = 1.0 / np.sqrt(2.0)

#: Bell vectors in flat order (00, 01, 10, 11); keys name the superposed pair.
_BELL_VECTORS = {
    "0011+": np.array([_SQRT_HALF, 0.0, 0.0, _SQRT_HALF], dtype=complex),
    "0011-": np.array([_SQRT_HALF, 0.0, 0.0, -_SQRT_HALF], dtype=complex),
    "0110+": np.array([0.0, _SQRT_HALF, _SQRT_HALF, 0.0], dtype=complex),
    "0110-": np.array([0.0, _SQRT_HALF, -_SQRT_HALF, 0.0], dtype=complex),
}


def _check_capacity(env: EnvironmentSpec) -> int:
    n = len(env.qubits)
    if n > MAX_ENV_QUBITS:
        raise ValueError(
            f"brute-force evolution supports at most {MAX_ENV_QUBITS} "
            f"environment qubits, got {n}"
        )
    return n


def diagonal_energies(p: SystemParams, env: EnvironmentSpec) -> np.ndarray:
    """Energy of every composite basis string, length 2^(N+2).

    E = (eps1 w1 + eps2 w2 + eps1 eps2 w12
         + sum_k epsE_k (wE_k + g_k1 eps1 + g_k2 eps2)) / 2,
    every term sharing the same eigenbasis.
    """
    n = _check_capacity(env)
    dim = 1 << (n + 2)
    idx = np.arange(dim)
    eps1 = 1.0 - 2.0 * ((idx >> (n + 1)) & 1)
    eps2 = 1.0 - 2.0 * ((idx >> n) & 1)
    energies = p.omega_s1 * eps1 + p.omega_s2 * eps2 + p.omega_s1s2 * eps1 * eps2
    for k, q in enumerate(env.qubits):
        eps_e = 1.0 - 2.0 * ((idx >> (n - 1 - k)) & 1)
        energies += eps_e * (q.omega_e + q.gamma_s1 * eps1 + q.gamma_s2 * eps2)
    return 0.5 * energies


def environment_product_state(env: EnvironmentSpec) -> np.ndarray:
    """Tensor product of the bath qubits' initial states, length 2^N."""
    vec = np.array([1.0 + 0.0j])
    for q in env.qubits:
        vec = np.kron(vec, np.array([q.alpha, q.beta], dtype=complex))
    return vec


def composite_state(soi: np.ndarray, env: EnvironmentSpec) -> np.ndarray:
    """System amplitudes tensored with the bath product state."""
    vec = np.kron(np.asarray(soi, dtype=complex), environment_product_state(env))
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"composite state norm {norm!r} is not 1")
    return vec


def _evolved_reduction(soi: np.ndarray, env: EnvironmentSpec, phases: np.ndarray) -> np.ndarray:
    """Evolve one pure composite state and trace out the environment."""
    psi = composite_state(soi, env) * phases
    blocks = psi.reshape(4, -1)
    return blocks @ blocks.conj().T


def brute_force_reduced_density(p: SystemParams, env: EnvironmentSpec,
                                state: InitialState, t: float) -> np.ndarray:
    """Reduced density matrix at time t from full composite evolution.

    Product states evolve as a single vector.  Werner-like states are
    diagonal in the Bell basis, so they evolve as a rank-4 mixture of
    pure composite states instead of a full composite density matrix.
    """
    _check_capacity(env)
    phases = np.exp(-1j * diagonal_energies(p, env) * t)
    if isinstance(state, ProductState):
        return _evolved_reduction(state.two_qubit_amplitudes(), env, phases)
    if isinstance(state, WernerLikeState):
        rho = np.zeros((4, 4), dtype=complex)
        for key, weight in bell_mixture_weights(state).items():
            if weight == 0.0:
                continue
            rho += weight * _evolved_reduction(_BELL_VECTORS[key], env, phases)
        return rho
    raise TypeError(f"unsupported initial state {type(state).__name__}")


def bell_mixture_weights(state: WernerLikeState) -> dict[str, float]:
    """Eigendecomposition weights of a Werner-like state in the Bell basis.

    The projector's Bell vector carries purity + (1 - purity)/4; the other
    three carry (1 - purity)/4 each.
    """
    lam = state.purity
    rest = (1.0 - lam) / 4.0
    weights = {key: rest for key in _BELL_VECTORS}
    weights["0011+" if state.variant == "w0011" else "0110+"] = lam + rest
    return weights


def reconstruct_initial_matrix(state: WernerLikeState) -> np.ndarray:
    """Rebuild the t = 0 coefficient matrix from the Bell mixture weights.

    Diagnostic counterpart of :func:`qubitbath.model.initial_coefficients`;
    the two must agree entrywise.
    """
    rho = np.zeros((4, 4), dtype=complex)
    for key, weight in bell_mixture_weights(state).items():
        vec = _BELL_VECTORS[key]
        rho += weight * np.outer(vec, vec.conj())
    return rho
