"""Closed-form time evolution of the reduced two-qubit density matrix.

Every term of the Hamiltonian is diagonal in the computational basis, so
each matrix element |lm><no| of the reduced state just picks up a
multiplier r_lmno(t): a pure phase from the system frequencies times one
overlap factor per bath qubit.  Writing eps(b) = +1 for bit 0 and -1 for
bit 1, the closed forms are

    s_lm(t)   = exp(-i t/2 (eps_l w1 + eps_m w2 + eps_l eps_m w12))
    f_k(t)    = |alpha_k|^2 exp(-i t D_k/2) + |beta_k|^2 exp(+i t D_k/2),
                D_k = (eps_l - eps_n) g_k1 + (eps_m - eps_o) g_k2
    r_lmno(t) = s_lm(t) conj(s_no(t)) * prod_k f_k(t)

which cover mutual and distinct baths uniformly (a distinct-bath qubit
simply has one coupling equal to zero).  Bath self-frequencies cancel out
of f_k exactly, so they never appear here.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .model import EnvironmentSpec, EnvQubit, InitialState, SystemParams, initial_coefficients

#: eps[b]: sigma-z eigenvalue of basis bit b.
_EPS = (1, -1)

#: (l, m) pairs in flat basis order 00, 01, 10, 11.
_BITS = ((0, 0), (0, 1), (1, 0), (1, 1))


def basis_sign(b: int) -> int:
    """sigma-z eigenvalue of the basis bit: 0 -> +1, 1 -> -1."""
    if b not in (0, 1):
        raise ValueError(f"basis bit must be 0 or 1, got {b!r}")
    return _EPS[b]


def _s_phase_rate(p: SystemParams, l: int, m: int) -> float:
    """d(arg s_lm)/dt: the system phase is exp(i * rate * t)."""
    el, em = _EPS[l], _EPS[m]
    return -0.5 * (el * p.omega_s1 + em * p.omega_s2 + el * em * p.omega_s1s2)


def s_factor(p: SystemParams, l: int, m: int, t: float) -> complex:
    """System phase of branch |lm>: exp(-i t/2 (eps_l w1 + eps_m w2 + eps_l eps_m w12))."""
    _check_time(t)
    return cmath.exp(1j * _s_phase_rate(p, l, m) * t)


def _overlap_rate(q: EnvQubit, l: int, m: int, n: int, o: int) -> float:
    """Branch splitting D = (eps_l - eps_n) g1 + (eps_m - eps_o) g2 for one bath qubit."""
    return (_EPS[l] - _EPS[n]) * q.gamma_s1 + (_EPS[m] - _EPS[o]) * q.gamma_s2


def env_overlap_factor(q: EnvQubit, l: int, m: int, n: int, o: int, t: float) -> complex:
    """Overlap of one bath qubit's states evolved along branches (l,m) and (n,o).

    The qubit self-frequency is common to both branches and cancels; only
    the coupling mismatch D contributes.
    """
    _check_time(t)
    delta = _overlap_rate(q, l, m, n, o)
    a2 = abs(q.alpha) ** 2
    b2 = abs(q.beta) ** 2
    half = 0.5 * delta * t
    return a2 * cmath.exp(-1j * half) + b2 * cmath.exp(1j * half)


def decoherence_factor(p: SystemParams, env: EnvironmentSpec,
                       l: int, m: int, n: int, o: int, t: float) -> complex:
    """Multiplier r_lmno(t) of the reduced-matrix element |lm><no|.

    Diagonal elements ((l,m) == (n,o)) are exactly 1: populations are
    conserved by the dephasing interaction.
    """
    _check_time(t)
    if (l, m) == (n, o):
        return 1.0 + 0.0j
    r = cmath.exp(1j * (_s_phase_rate(p, l, m) - _s_phase_rate(p, n, o)) * t)
    for q in env.qubits:
        r *= env_overlap_factor(q, l, m, n, o, t)
    return r


def decoherence_factor_binomial(p: SystemParams, n_env: int, gamma: float,
                                alpha_sq: float, beta_sq: float,
                                l: int, m: int, n: int, o: int, t: float) -> complex:
    """r_lmno(t) for a homogeneous mutual bath via the binomial expansion.

    For identical qubits the product of overlap factors expands into
    sum_k C(n_env, k) |alpha|^(2k) |beta|^(2(n_env-k)) exp(i gamma c (n_env - 2k) t)
    with c in {0, +-1, +-2} set by the index family.  Used as an
    independent route to cross-check the product form.
    """
    _check_time(t)
    if n_env < 0:
        raise ValueError(f"n_env must be >= 0, got {n_env}")
    if (l, m) == (n, o):
        return 1.0 + 0.0j
    s_phase = cmath.exp(1j * (_s_phase_rate(p, l, m) - _s_phase_rate(p, n, o)) * t)
    # D = 2*gamma*c, so each expansion term carries exp(i gamma c (n_env-2k) t).
    c = ((_EPS[l] - _EPS[n]) + (_EPS[m] - _EPS[o])) // 2
    if n_env == 0 or c == 0:
        # Empty bath, or a branch pair the bath cannot distinguish: the
        # binomial sum is (alpha_sq + beta_sq)^n_env = 1.
        return s_phase
    acc = 0.0 + 0.0j
    for k in range(n_env + 1):
        acc += _binomial_weight(n_env, k, alpha_sq, beta_sq) * cmath.exp(1j * gamma * c * (n_env - 2 * k) * t)
    return s_phase * acc


def _binomial_weight(n: int, k: int, alpha_sq: float, beta_sq: float) -> float:
    """C(n,k) alpha_sq^k beta_sq^(n-k), in log space for large n to avoid overflow."""
    if n <= 50:
        return math.comb(n, k) * alpha_sq**k * beta_sq ** (n - k)
    if (alpha_sq == 0.0 and k > 0) or (beta_sq == 0.0 and k < n):
        return 0.0
    log_c = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    log_p = (k * math.log(alpha_sq) if k else 0.0) + ((n - k) * math.log(beta_sq) if k < n else 0.0)
    return math.exp(log_c + log_p)


def decoherence_factors(p: SystemParams, env: EnvironmentSpec, t: float) -> np.ndarray:
    """All sixteen r_lmno(t) as a 4x4 array indexed by flat (lm, no).

    Unit diagonal and conjugate symmetry hold exactly by construction.
    """
    r = np.empty((4, 4), dtype=complex)
    for i, (l, m) in enumerate(_BITS):
        r[i, i] = 1.0
        for j in range(i + 1, 4):
            n, o = _BITS[j]
            val = decoherence_factor(p, env, l, m, n, o, t)
            r[i, j] = val
            r[j, i] = val.conjugate()
    return r


def reduced_density(p: SystemParams, env: EnvironmentSpec, state: InitialState, t: float) -> np.ndarray:
    """Reduced density matrix of the two system qubits at time t.

    Entrywise product of the initial coefficient matrix with the
    decoherence factors; at t = 0 this is the coefficient matrix itself.
    """
    rho = initial_coefficients(state) * decoherence_factors(p, env, t)
    tr = rho.trace().real
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"reduced density trace {tr!r} drifted from 1")
    return rho


def decoherence_factors_series(p: SystemParams, env: EnvironmentSpec, times: np.ndarray) -> np.ndarray:
    """r_lmno over a whole time grid, shape (len(times), 4, 4).

    Same closed form as :func:`decoherence_factor`, broadcast over t; this
    is the sweep engine's hot path.
    """
    times = np.asarray(times, dtype=float)
    out = np.empty((times.size, 4, 4), dtype=complex)
    out[:, range(4), range(4)] = 1.0
    for i, (l, m) in enumerate(_BITS):
        for j in range(i + 1, 4):
            n, o = _BITS[j]
            rate = _s_phase_rate(p, l, m) - _s_phase_rate(p, n, o)
            col = np.exp(1j * rate * times)
            for q in env.qubits:
                delta = _overlap_rate(q, l, m, n, o)
                if delta == 0.0:
                    continue
                a2 = abs(q.alpha) ** 2
                b2 = abs(q.beta) ** 2
                half = np.exp(-0.5j * delta * times)
                col = col * (a2 * half + b2 * half.conj())
            out[:, i, j] = col
            out[:, j, i] = col.conj()
    return out


def reduced_density_series(p: SystemParams, env: EnvironmentSpec,
                           state: InitialState, times: np.ndarray) -> np.ndarray:
    """Reduced density matrices over a time grid, shape (len(times), 4, 4)."""
    return initial_coefficients(state)[None, :, :] * decoherence_factors_series(p, env, times)


def _check_time(t: float) -> None:
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
