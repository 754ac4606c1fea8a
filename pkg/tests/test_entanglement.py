"""Concurrence pipeline: spin flip, eigenvalues, and the X-state fast path.

Independent routes used as oracles: the characteristic polynomial of
rho * rho_tilde built from power-sum traces (Newton's identities) and
solved as a quartic, and the pure-state reduction 2|a00 a11 - a01 a10|.
"""

import math

import numpy as np
import pytest

from qubitbath import dynamics, model
from qubitbath import entanglement as ent
from qubitbath.verification import random_x_state

RNG = np.random.default_rng(20240803)

BELL_PHI_PLUS = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)


def _dm(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    return np.outer(vec, vec.conj())


def _charpoly_nus(rho: np.ndarray) -> np.ndarray:
    """nu values from the quartic characteristic polynomial of rho*rho_tilde.

    Coefficients come from Newton's identities on tr(M^k); the quartic is
    solved by the companion-matrix method, entirely independent of the
    Hermitian-similarity pipeline under test.
    """
    m = rho @ ent.spin_flip(rho)
    powers = [m]
    for _ in range(3):
        powers.append(powers[-1] @ m)
    p1, p2, p3, p4 = (complex(np.trace(mk)) for mk in powers)
    e1 = p1
    e2 = (e1 * p1 - p2) / 2.0
    e3 = (e2 * p1 - e1 * p2 + p3) / 3.0
    e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0
    roots = np.roots([1.0, -e1, e2, -e3, e4])
    return np.sort(np.sqrt(np.clip(roots.real, 0.0, None)))[::-1]


def _random_density(rng, rank: int = 4) -> np.ndarray:
    raw = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = raw @ raw.conj().T
    return rho / rho.trace()


def test_spin_flip_basis_projector():
    rho = _dm([1, 0, 0, 0])
    flipped = ent.spin_flip(rho)
    assert np.array_equal(flipped, _dm([0, 0, 0, 1]))


def test_spin_flip_bell_invariant():
    rho = _dm(BELL_PHI_PLUS)
    assert np.allclose(ent.spin_flip(rho), rho, atol=1e-16)


def test_spin_flip_is_involution():
    for _ in range(20):
        rho = _random_density(RNG)
        assert np.array_equal(ent.spin_flip(ent.spin_flip(rho)), rho)


def test_spin_flip_matches_sigma_y_sandwich():
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    syy = np.kron(sy, sy)
    for _ in range(20):
        rho = _random_density(RNG)
        want = syy @ rho.conj() @ syy
        assert np.allclose(ent.spin_flip(rho), want, atol=1e-15)


def test_eigenvalues_maximally_mixed():
    eigs = ent.eigenvalues_rho_rhotilde(np.eye(4, dtype=complex) / 4.0)
    assert np.allclose(eigs, 1.0 / 16.0, atol=1e-14)


def test_eigenvalues_bell_state():
    eigs = ent.eigenvalues_rho_rhotilde(_dm(BELL_PHI_PLUS))
    assert np.allclose(eigs, [1.0, 0.0, 0.0, 0.0], atol=1e-12)


def test_eigenvalues_match_characteristic_polynomial():
    for _ in range(200):
        rho = random_x_state(RNG)
        mine = ent.eigenvalues_rho_rhotilde(rho)
        want = _charpoly_nus(rho) ** 2
        assert np.max(np.abs(mine - want)) < 1e-9


def test_eigenvalues_match_characteristic_polynomial_generic():
    for _ in range(200):
        rho = _random_density(RNG)
        nus = np.sqrt(ent.eigenvalues_rho_rhotilde(rho))
        want = _charpoly_nus(rho)
        assert np.max(np.abs(nus - want)) < 1e-7  # quartic solver limits accuracy


def test_eigenvalues_reject_non_hermitian():
    rho = np.eye(4, dtype=complex) / 4.0
    rho[0, 1] = 0.5
    with pytest.raises(ValueError, match="Hermitian"):
        ent.eigenvalues_rho_rhotilde(rho)


def test_eigenvalues_reject_deeply_negative_input():
    rho = np.diag([0.7, 0.5, -0.1, -0.1]).astype(complex)
    with pytest.raises(ValueError, match="below the roundoff floor"):
        ent.eigenvalues_rho_rhotilde(rho)


def test_concurrence_product_state_is_zero():
    assert ent.concurrence(_dm([1, 0, 0, 0])) == 0.0


def test_concurrence_bell_states_are_one():
    sq = 1.0 / math.sqrt(2.0)
    bells = [
        [sq, 0, 0, sq], [sq, 0, 0, -sq],
        [0, sq, sq, 0], [0, sq, -sq, 0],
    ]
    for vec in bells:
        assert abs(ent.concurrence(_dm(vec)) - 1.0) < 1e-10


def test_concurrence_werner_thresholds():
    for lam, want in [(0.0, 0.0), (0.2, 0.0), (1.0 / 3.0, 0.0),
                      (0.5, 0.25), (2.0 / 3.0, 0.5), (1.0, 1.0)]:
        for variant in model.WERNER_VARIANTS:
            rho = model.initial_coefficients(model.WernerLikeState(variant, lam))
            assert abs(ent.concurrence(rho) - max(0.0, (3.0 * lam - 1.0) / 2.0)) < 1e-10


def test_concurrence_pure_state_reduction():
    for _ in range(100):
        raw = RNG.normal(size=4) + 1j * RNG.normal(size=4)
        psi = raw / np.linalg.norm(raw)
        want = 2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2])
        assert abs(ent.concurrence(_dm(psi)) - want) < 1e-10


def test_concurrence_output_range():
    for _ in range(50):
        c = ent.concurrence(_random_density(RNG, rank=int(RNG.integers(1, 5))))
        assert 0.0 <= c <= 1.0


def test_x_state_examples():
    assert ent.concurrence_x_state(np.eye(4, dtype=complex) / 4.0) == 0.0
    bell_psi = model.initial_coefficients(model.WernerLikeState("w0110", 1.0))
    assert abs(ent.concurrence_x_state(bell_psi) - 1.0) < 1e-12


def test_x_state_agrees_with_general_pipeline():
    for _ in range(2000):
        rho = random_x_state(RNG)
        assert abs(ent.concurrence(rho) - ent.concurrence_x_state(rho)) < 1e-9


def test_x_state_rejects_off_pattern_entries():
    rho = np.eye(4, dtype=complex) / 4.0
    rho[0, 1] = rho[1, 0] = 1e-6
    with pytest.raises(ValueError, match="X-structured"):
        ent.concurrence_x_state(rho)


def test_concurrence_invariant_under_local_frequencies():
    # omega_s1 / omega_s2 enter only as local unitaries, so the concurrence
    # of the evolved state cannot depend on them, for any initial state.
    env = model.homogeneous_mutual(2, 0.8)
    states = [model.make_unbiased_ps(), model.WernerLikeState("w0011", 0.7)]
    for state in states:
        for t in (0.9, 3.7, 11.2):
            base = ent.concurrence(dynamics.reduced_density(
                model.SystemParams(1.0, 2.0, 0.6), env, state, t))
            for w1, w2 in [(0.0, 2.0), (4.4, 2.0), (1.0, 0.1), (3.3, 4.9)]:
                other = ent.concurrence(dynamics.reduced_density(
                    model.SystemParams(w1, w2, 0.6), env, state, t))
                assert abs(other - base) < 1e-10


def test_ewl_concurrence_depends_only_on_factor_moduli():
    # For Werner-like states even omega_s1s2 drops out: the X corners feel
    # only the modulus of their decoherence factors.
    env = model.homogeneous_mutual(3, 1.1)
    state = model.WernerLikeState("w0011", 0.9)
    for t in (0.7, 2.9, 8.3):
        base = ent.concurrence(dynamics.reduced_density(
            model.SystemParams(1.0, 1.0, 0.3), env, state, t))
        for w12 in (0.0, 1.7, 4.2):
            other = ent.concurrence(dynamics.reduced_density(
                model.SystemParams(0.2, 3.8, w12), env, state, t))
            assert abs(other - base) < 1e-10
