"""Randomized self-checks: closed forms against brute force, plus invariants.

This backs the CLI ``verify`` command.  The brute-force composite
evolution is the ground truth for the closed-form dynamics; the invariant
suites probe the structural properties that must hold regardless of
parameters (Hermiticity, unit populations, bath self-frequency inertness,
binomial/product agreement, X-state fast path, seeded-noise determinism).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from . import dynamics, entanglement, model, oracle
from .rng import sample_white_noise

ORACLE_TOL = 1e-10


@dataclass
class CheckResult:
    name: str
    checks: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _random_env(rng: np.random.Generator, n_max: int, biased: bool = True) -> model.EnvironmentSpec:
    n = int(rng.integers(0, n_max + 1))
    arrangement = rng.choice(["mutual", "distinct", "decoupled"])
    qubits = []
    for _ in range(n):
        g1 = float(rng.uniform(0.0, 5.0))
        g2 = float(rng.uniform(0.0, 5.0))
        if arrangement == "distinct":
            if rng.random() < 0.5:
                g2 = 0.0
            else:
                g1 = 0.0
        elif arrangement == "decoupled":
            g1 = g2 = 0.0
        if biased:
            raw = rng.normal(size=2) + 1j * rng.normal(size=2)
        else:
            raw = np.array([1.0, 1.0])
        raw = raw / np.linalg.norm(raw)
        qubits.append(model.EnvQubit(g1, g2, complex(raw[0]), complex(raw[1]),
                                     omega_e=float(rng.uniform(0.0, 5.0))))
    return model.EnvironmentSpec(tuple(qubits))


def _random_state(rng: np.random.Generator) -> model.InitialState:
    if rng.random() < 0.5:
        raw = rng.normal(size=4) + 1j * rng.normal(size=4)
        q1 = raw[:2] / np.linalg.norm(raw[:2])
        q2 = raw[2:] / np.linalg.norm(raw[2:])
        return model.ProductState(complex(q1[0]), complex(q1[1]), complex(q2[0]), complex(q2[1]))
    variant = "w0011" if rng.random() < 0.5 else "w0110"
    return model.WernerLikeState(variant, float(rng.uniform(0.0, 1.0)))


def _random_system(rng: np.random.Generator) -> model.SystemParams:
    return model.SystemParams(*(float(v) for v in rng.uniform(0.0, 5.0, size=3)))


def oracle_equivalence(cases: int = 200, n_max: int = 6, seed: int = 20240801,
                       tol: float = ORACLE_TOL) -> CheckResult:
    """Closed-form reduced density against brute-force composite evolution."""
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    failures = 0
    worst = 0.0
    for _ in range(cases):
        p = _random_system(rng)
        env = _random_env(rng, n_max)
        state = _random_state(rng)
        t = float(rng.uniform(0.0, 20.0))
        fast = dynamics.reduced_density(p, env, state, t)
        slow = oracle.brute_force_reduced_density(p, env, state, t)
        err = float(np.max(np.abs(fast - slow)))
        worst = max(worst, err)
        if err > tol:
            failures += 1
    elapsed = time.perf_counter() - start
    return CheckResult("oracle equivalence", cases, failures,
                       f"max entry error {worst:.2e}, {elapsed:.2f} s")


def density_invariants(cases: int = 60, seed: int = 7) -> CheckResult:
    """Hermiticity, unit trace, and positivity of evolved densities."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(cases):
        p = _random_system(rng)
        env = _random_env(rng, 5)
        state = _random_state(rng)
        rho = dynamics.reduced_density(p, env, state, float(rng.uniform(0.0, 20.0)))
        try:
            model.validate_density_matrix(rho)
        except ValueError:
            failures += 1
    return CheckResult("density-matrix invariants", cases, failures)


def decoherence_invariants(cases: int = 60, seed: int = 11) -> CheckResult:
    """Unit diagonal, exact conjugate pairing, and modulus bound of r."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(cases):
        p = _random_system(rng)
        env = _random_env(rng, 5)
        t = float(rng.uniform(0.0, 20.0))
        r = dynamics.decoherence_factors(p, env, t)
        ok = all(r[i, i] == 1.0 for i in range(4))
        ok = ok and all(r[j, i] == r[i, j].conjugate() for i in range(4) for j in range(4))
        ok = ok and bool(np.all(np.abs(r) <= 1.0 + 1e-12))
        failures += 0 if ok else 1
    return CheckResult("decoherence-factor invariants", cases, failures)


def bath_frequency_inertness(cases: int = 20, seed: int = 13) -> CheckResult:
    """Perturbing every bath self-frequency must leave the dynamics bit-identical."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(cases):
        p = _random_system(rng)
        env = _random_env(rng, 5)
        state = _random_state(rng)
        t = float(rng.uniform(0.0, 20.0))
        shifted = model.EnvironmentSpec(tuple(
            replace(q, omega_e=float(rng.uniform(0.0, 9.0))) for q in env.qubits
        ))
        a = dynamics.reduced_density(p, env, state, t)
        b = dynamics.reduced_density(p, shifted, state, t)
        if not np.array_equal(a, b):
            failures += 1
    return CheckResult("bath self-frequency inertness", cases, failures)


def binomial_agreement(cases: int = 40, seed: int = 17, n_max: int = 30) -> CheckResult:
    """Binomial-sum route equals the product route on homogeneous baths."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(cases):
        p = _random_system(rng)
        n = int(rng.integers(0, n_max + 1))
        gamma = float(rng.uniform(0.0, 5.0))
        env = model.homogeneous_mutual(n, gamma)
        t = float(rng.uniform(0.0, 20.0))
        i, j = rng.integers(0, 4, size=2)
        l, m = divmod(int(i), 2)
        nn, o = divmod(int(j), 2)
        a = dynamics.decoherence_factor(p, env, l, m, nn, o, t)
        b = dynamics.decoherence_factor_binomial(p, n, gamma, 0.5, 0.5, l, m, nn, o, t)
        if abs(a - b) > 1e-12:
            failures += 1
    return CheckResult("binomial/product agreement", cases, failures)


def x_state_cross_check(cases: int = 300, seed: int = 19) -> CheckResult:
    """Closed-form X-state concurrence against the eigenvalue pipeline."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(cases):
        rho = random_x_state(rng)
        a = entanglement.concurrence(rho)
        b = entanglement.concurrence_x_state(rho)
        if abs(a - b) > 1e-9:
            failures += 1
    return CheckResult("X-state fast path", cases, failures)


def noise_determinism(seed: int = 23) -> CheckResult:
    """Seed reproducibility, bounds, and the degenerate-interval case."""
    checks = 0
    failures = 0

    def record(ok: bool):
        nonlocal checks, failures
        checks += 1
        failures += 0 if ok else 1

    a = sample_white_noise(0.5, 0.1, seed, 64)
    record(a == sample_white_noise(0.5, 0.1, seed, 64))
    record(a != sample_white_noise(0.5, 0.1, seed + 1, 64))
    record(all(0.4 <= v <= 0.6 for v in a))
    record(all(v == 0.75 for v in sample_white_noise(0.75, 0.0, seed, 32)))
    env = model.white_noise_mutual(6, 0.5, 0.1, seed)
    record(env == model.white_noise_mutual(6, 0.5, 0.1, seed))
    return CheckResult("white-noise determinism", checks, failures)


def random_x_state(rng: np.random.Generator) -> np.ndarray:
    """Random physical density matrix with the X sparsity pattern."""
    diag = rng.uniform(0.1, 1.0, size=4)
    diag = diag / diag.sum()
    rho = np.diag(diag).astype(complex)
    # |corner| <= sqrt of the paired populations keeps the matrix PSD.
    mag_outer = rng.uniform(0.0, 1.0) * np.sqrt(diag[0] * diag[3])
    mag_inner = rng.uniform(0.0, 1.0) * np.sqrt(diag[1] * diag[2])
    phase_outer = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    phase_inner = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    rho[0, 3] = mag_outer * phase_outer
    rho[3, 0] = rho[0, 3].conjugate()
    rho[1, 2] = mag_inner * phase_inner
    rho[2, 1] = rho[1, 2].conjugate()
    return rho


def invariant_suites(seed_base: int = 0) -> list[CheckResult]:
    return [
        density_invariants(seed=seed_base + 7),
        decoherence_invariants(seed=seed_base + 11),
        bath_frequency_inertness(seed=seed_base + 13),
        binomial_agreement(seed=seed_base + 17),
        x_state_cross_check(seed=seed_base + 19),
        noise_determinism(seed=seed_base + 23),
    ]
