"""Acceptance suite: one test per release criterion, at pinned tolerances.

Each test prints a single ``ACCEPTANCE PASS/FAIL <criterion>`` line (visible
with ``pytest -s``).  Tolerances here are contractual; loosening them is a
release decision, not a test fix.
"""

import io
import math
import time
from contextlib import contextmanager, redirect_stdout

import numpy as np

from qubitbath import cli, model, sweep
from qubitbath.dynamics import reduced_density, reduced_density_series
from qubitbath.entanglement import concurrence, concurrence_x_state
from qubitbath.verification import oracle_equivalence, random_x_state

PS = model.make_unbiased_ps()
BELL_0011 = model.WernerLikeState("w0011", 1.0)


@contextmanager
def _criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE FAIL {name}", flush=True)
        raise
    print(f"ACCEPTANCE PASS {name}", flush=True)


def _concurrence_row(p, env, state, times):
    rhos = reduced_density_series(p, env, state, times)
    return np.array([concurrence(r) for r in rhos])


def test_oracle_equivalence_200_random_configurations():
    with _criterion("oracle equivalence (200 cases, N<=6, 1e-10, <60s)"):
        start = time.perf_counter()
        result = oracle_equivalence(cases=200, n_max=6, seed=20240801, tol=1e-10)
        elapsed = time.perf_counter() - start
        assert result.failures == 0, result.detail
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_concurrence_correctness():
    with _criterion("concurrence correctness (Bell, basis, Werner curve, X fast path)"):
        sq = 1.0 / math.sqrt(2.0)
        for vec in ([sq, 0, 0, sq], [sq, 0, 0, -sq], [0, sq, sq, 0], [0, sq, -sq, 0]):
            rho = np.outer(vec, np.conj(vec)).astype(complex)
            assert abs(concurrence(rho) - 1.0) < 1e-10
        basis = np.zeros((4, 4), dtype=complex)
        basis[0, 0] = 1.0
        assert concurrence(basis) == 0.0
        for lam in (0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0):
            for variant in model.WERNER_VARIANTS:
                rho = model.initial_coefficients(model.WernerLikeState(variant, lam))
                want = max(0.0, (3.0 * lam - 1.0) / 2.0)
                assert abs(concurrence(rho) - want) < 1e-10
        rng = np.random.default_rng(424242)
        for _ in range(10_000):
            rho = random_x_state(rng)
            assert abs(concurrence(rho) - concurrence_x_state(rho)) < 1e-9


def test_closed_system_law():
    with _criterion("closed-system law C(t) = |sin(w12 t)| (400 points, 1e-10)"):
        p = model.SystemParams(0.8, 1.9, 1.3)
        env = model.EnvironmentSpec()
        times = np.linspace(0.0, 15.0, 400)
        row = _concurrence_row(p, env, PS, times)
        want = np.abs(np.sin(p.omega_s1s2 * times))
        assert np.max(np.abs(row - want)) < 1e-10


def test_ewl_homogeneous_law():
    with _criterion("EWL homogeneous law (|cos 2Gt|^N at 1e-9; immune variant constant at 1e-10)"):
        gamma = 0.7
        p = model.SystemParams(1.0, 1.6, 1.1)
        times = np.linspace(0.0, 10.0, 300)
        for n in (1, 2, 5, 10):
            env = model.homogeneous_mutual(n, gamma)
            row = _concurrence_row(p, env, BELL_0011, times)
            want = np.abs(np.cos(2.0 * gamma * times)) ** n
            assert np.max(np.abs(row - want)) < 1e-9
        env = model.homogeneous_mutual(4, gamma)
        for lam in (0.5, 1.0):
            row = _concurrence_row(p, env, model.WernerLikeState("w0110", lam), times)
            want = max(0.0, (3.0 * lam - 1.0) / 2.0)
            assert np.max(np.abs(row - want)) < 1e-10


def test_frequency_invariances():
    with _criterion("frequency invariances (w1, w2 for all states; w12 for EWL)"):
        recipe = sweep.EnvironmentRecipe(kind="homogeneous_mutual", n=2, gamma=0.9)
        grid = sweep.TimeGrid(0.0, 10.0, 150)
        states = [PS, BELL_0011, model.WernerLikeState("w0011", 0.6),
                  model.WernerLikeState("w0110", 0.8)]
        for state in states:
            for axis in ("omega_s1", "omega_s2"):
                spec = sweep.SweepSpec(
                    system=model.SystemParams(1.0, 1.0, 1.2), environment=recipe,
                    state=state, axis_name=axis, axis_values=(0.0, 0.7, 2.3, 4.8),
                    time_grid=grid, master_seed=5)
                values = sweep.run_sweep(spec).values
                assert np.max(values.max(axis=0) - values.min(axis=0)) < 1e-10
        for state in states[1:]:
            spec = sweep.SweepSpec(
                system=model.SystemParams(1.0, 1.0, 1.2), environment=recipe,
                state=state, axis_name="omega_s1s2", axis_values=(0.0, 0.7, 2.3, 4.8),
                time_grid=grid, master_seed=5)
            values = sweep.run_sweep(spec).values
            assert np.max(values.max(axis=0) - values.min(axis=0)) < 1e-10


def test_revival_periodicity():
    with _criterion("periodicity C(t + 2pi/G) = C(t) at w12 = G (1e-9)"):
        gamma = 0.8
        p = model.SystemParams(math.pi / 2.0, math.sqrt(3.0), gamma)
        period = 2.0 * math.pi / gamma
        times = np.linspace(0.0, period, 200)
        for state in (PS, BELL_0011):
            env = model.homogeneous_mutual(3, gamma)
            base = _concurrence_row(p, env, state, times)
            shifted = _concurrence_row(p, env, state, times + period)
            assert np.max(np.abs(shifted - base)) < 1e-9


def test_qualitative_figure_claims():
    with _criterion("figure claims (attenuation, non-maximality, gaps, dissipation, distribution)"):
        gamma = 1.0
        p = model.SystemParams(1.0, 1.0, gamma)
        times = np.linspace(0.0, 4.0 * math.pi / gamma, 400)

        maxima = [sweep.max_concurrence(
            _concurrence_row(p, model.homogeneous_mutual(n, gamma), PS, times))
            for n in (1, 2, 4, 8)]
        assert all(m < 0.99 for m in maxima), maxima
        assert all(a >= b for a, b in zip(maxima, maxima[1:])), maxima

        env1 = model.homogeneous_mutual(1, gamma)
        at_ratio_1 = sweep.max_concurrence(_concurrence_row(
            model.SystemParams(1.0, 1.0, 1.0), env1, PS, times))
        at_ratio_half = sweep.max_concurrence(_concurrence_row(
            model.SystemParams(1.0, 1.0, 0.5), env1, PS, times))
        assert at_ratio_1 < at_ratio_half

        noise_times = np.linspace(0.0, 20.0, 400)
        dissipation = []
        for f in (0.05, 0.1, 0.2):
            env = model.white_noise_mutual(100, 0.5, f, seed=31337)
            row = _concurrence_row(p, env, BELL_0011, noise_times)
            t_d = sweep.dissipation_time(noise_times, row, threshold=0.05)
            assert t_d is not None, f"f={f} never settles below threshold"
            dissipation.append(t_d)
        assert all(a >= b for a, b in zip(dissipation, dissipation[1:])), dissipation

        ps_62 = _concurrence_row(p, model.distinct_homogeneous(6, gamma, 2, gamma), PS, times)
        ps_44 = _concurrence_row(p, model.distinct_homogeneous(4, gamma, 4, gamma), PS, times)
        assert np.max(np.abs(ps_62 - ps_44)) > 1e-3
        bell_62 = _concurrence_row(p, model.distinct_homogeneous(6, gamma, 2, gamma), BELL_0011, times)
        bell_44 = _concurrence_row(p, model.distinct_homogeneous(4, gamma, 4, gamma), BELL_0011, times)
        assert np.max(np.abs(bell_62 - bell_44)) < 1e-10


def test_preset_determinism(tmp_path):
    with _criterion("determinism: preset fig6 --seed 42 twice, byte-identical"):
        out1 = tmp_path / "run1"
        out2 = tmp_path / "run2"
        with redirect_stdout(io.StringIO()):
            assert cli.main(["preset", "fig6", "--seed", "42", "-o", str(out1)]) == 0
            assert cli.main(["preset", "fig6", "--seed", "42", "-o", str(out2)]) == 0
        names = sorted(path.name for path in out1.iterdir())
        assert names == sorted(path.name for path in out2.iterdir())
        assert len(names) == 6  # three panels, each with data + manifest
        for name in names:
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name
