"""Parameter-grid evaluation: one swept axis versus time.

A sweep takes a base configuration (system frequencies, an environment
recipe, an initial state), a named axis with a list of values, and a time
grid.  Each axis value defines one row: the recipe is rebuilt (re-drawing
any white-noise couplings from a per-row seed), the reduced state is
evolved over the grid, and the concurrence of every time point fills the
row.  Rows are pure functions of (spec, row index), so they can be
computed in any order, in parallel, or re-run in isolation, always giving
bit-identical results.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import model
from .dynamics import reduced_density_series
from .entanglement import concurrence
from .model import EnvironmentSpec, InitialState, SystemParams, WernerLikeState
from .rng import derive_row_seed, sample_white_noise  # noqa: F401  (re-exported API)

TIME_AXIS_TRANSFORMS = ("linear", "reciprocal")

#: Axis names accepted by SweepSpec and the environment kinds they act on.
SWEEP_AXES = ("omega_s1", "omega_s2", "omega_s1s2", "gamma", "lambda",
              "N", "mu", "f", "M", "N1_share")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform evaluation grid; ``reciprocal`` only relabels output as 1/t."""

    t_min: float
    t_max: float
    samples: int = 400
    axis_transform: str = "linear"

    def __post_init__(self):
        if not (math.isfinite(self.t_min) and math.isfinite(self.t_max)):
            raise ValueError("time bounds must be finite")
        if self.t_min < 0.0 or self.t_max <= self.t_min:
            raise ValueError(f"need 0 <= t_min < t_max, got [{self.t_min}, {self.t_max}]")
        if self.samples < 2:
            raise ValueError(f"samples must be >= 2, got {self.samples}")
        if self.axis_transform not in TIME_AXIS_TRANSFORMS:
            raise ValueError(f"axis_transform must be one of {TIME_AXIS_TRANSFORMS}")
        if self.axis_transform == "reciprocal" and self.t_min <= 0.0:
            raise ValueError("reciprocal time axis requires t_min > 0")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.samples)

    def output_times(self) -> np.ndarray:
        """Time coordinates as emitted: raw t, or 1/t in reciprocal mode."""
        t = self.times()
        return 1.0 / t if self.axis_transform == "reciprocal" else t


@dataclass(frozen=True)
class EnvironmentRecipe:
    """Serializable description of how to build an EnvironmentSpec.

    Only the fields relevant to ``kind`` are read.  For the ``mixed``
    kind, ``f_scale`` / ``gamma_s1_scale`` optionally tie f and the
    homogeneous coupling to the white-noise mean (f = f_scale * mu,
    gamma_s1 = gamma_s1_scale * mu), which is how presets couple those
    knobs while sweeping mu.
    """

    kind: str
    n: int = 0
    gamma: float = 0.0
    mu: float = 0.0
    f: float = 0.0
    n1: int = 0
    n2: int = 0
    gamma_s1: float = 0.0
    gamma_s2: float = 0.0
    m: float = 1.0
    f_scale: float | None = None
    gamma_s1_scale: float | None = None

    def __post_init__(self):
        if self.kind not in ("homogeneous_mutual", "white_noise_mutual",
                             "distinct_homogeneous", "distinct_case1", "mixed"):
            raise ValueError(f"unknown environment kind {self.kind!r}")
        for name in ("n", "n1", "n2"):
            count = getattr(self, name)
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {count!r}")
        for name in ("gamma", "mu", "f", "gamma_s1", "gamma_s2", "m"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")

    def build(self, seed: int) -> EnvironmentSpec:
        if self.kind == "homogeneous_mutual":
            return model.homogeneous_mutual(self.n, self.gamma)
        if self.kind == "white_noise_mutual":
            return model.white_noise_mutual(self.n, self.mu, self.f, seed)
        if self.kind == "distinct_homogeneous":
            return model.distinct_homogeneous(self.n1, self.gamma_s1, self.n2, self.gamma_s2)
        if self.kind == "distinct_case1":
            return model.distinct_case1(self.n1, self.n2, self.gamma_s2, self.m)
        f = self.f if self.f_scale is None else self.f_scale * self.mu
        g1 = self.gamma_s1 if self.gamma_s1_scale is None else self.gamma_s1_scale * self.mu
        return model.mixed(self.n1, g1, self.n2, self.mu, f, seed)


@dataclass(frozen=True)
class SweepSpec:
    """Complete, reproducible description of one sweep."""

    system: SystemParams
    environment: EnvironmentRecipe
    state: InitialState
    axis_name: str
    axis_values: tuple[float, ...]
    time_grid: TimeGrid
    master_seed: int
    repeats: int = 1

    def __post_init__(self):
        if self.axis_name not in SWEEP_AXES:
            raise ValueError(f"unknown sweep axis {self.axis_name!r}; expected one of {SWEEP_AXES}")
        if len(self.axis_values) == 0:
            raise ValueError("axis_values must be nonempty")
        object.__setattr__(self, "axis_values", tuple(float(v) for v in self.axis_values))
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")
        for v in self.axis_values:
            self.configuration_for(v)  # fail fast on out-of-domain values


    def configuration_for(self, value: float) -> tuple[SystemParams, EnvironmentRecipe, InitialState]:
        """Base configuration with the swept axis set to ``value``."""
        sys_p, recipe, state = self.system, self.environment, self.state
        axis = self.axis_name
        if axis in ("omega_s1", "omega_s2", "omega_s1s2"):
            return replace(sys_p, **{axis: value}), recipe, state
        if axis == "lambda":
            if not isinstance(state, WernerLikeState):
                raise ValueError("axis 'lambda' requires a Werner-like initial state")
            return sys_p, recipe, replace(state, purity=value)
        if axis == "gamma":
            if recipe.kind == "homogeneous_mutual":
                return sys_p, replace(recipe, gamma=value), state
            if recipe.kind == "distinct_homogeneous":
                return sys_p, replace(recipe, gamma_s1=value, gamma_s2=value), state
            if recipe.kind == "distinct_case1":
                return sys_p, replace(recipe, gamma_s2=value), state
            if recipe.kind == "mixed":
                return sys_p, replace(recipe, gamma_s1=value), state
            raise ValueError(f"axis 'gamma' does not apply to kind {recipe.kind!r}")
        if axis == "N":
            if recipe.kind not in ("homogeneous_mutual", "white_noise_mutual"):
                raise ValueError(f"axis 'N' does not apply to kind {recipe.kind!r}")
            return sys_p, replace(recipe, n=_as_count(axis, value)), state
        if axis == "mu":
            if recipe.kind not in ("white_noise_mutual", "mixed"):
                raise ValueError(f"axis 'mu' does not apply to kind {recipe.kind!r}")
            return sys_p, replace(recipe, mu=value), state
        if axis == "f":
            if recipe.kind not in ("white_noise_mutual", "mixed"):
                raise ValueError(f"axis 'f' does not apply to kind {recipe.kind!r}")
            return sys_p, replace(recipe, f=value), state
        if axis == "M":
            if recipe.kind != "distinct_case1":
                raise ValueError(f"axis 'M' does not apply to kind {recipe.kind!r}")
            return sys_p, replace(recipe, m=value), state
        # N1_share: redistribute a fixed bath total between the two sides.
        if recipe.kind not in ("distinct_homogeneous", "distinct_case1"):
            raise ValueError(f"axis 'N1_share' does not apply to kind {recipe.kind!r}")
        n1 = _as_count(axis, value)
        total = recipe.n1 + recipe.n2
        if n1 > total:
            raise ValueError(f"N1_share {n1} exceeds the bath total {total}")
        return sys_p, replace(recipe, n1=n1, n2=total - n1), state


@dataclass(frozen=True)
class ConcurrenceGrid:
    """Sweep output: concurrence over (axis value x time), plus provenance."""

    spec: SweepSpec
    axis_values: np.ndarray
    times: np.ndarray
    values: np.ndarray
    row_seeds: tuple[int, ...]

    def __post_init__(self):
        if self.values.shape != (self.axis_values.size, self.times.size):
            raise ValueError(f"grid shape {self.values.shape} does not match axes")

    @property
    def output_times(self) -> np.ndarray:
        """Time coordinates as emitted (1/t when the grid is reciprocal)."""
        return self.spec.time_grid.output_times()


def _as_count(axis: str, value: float) -> int:
    n = int(round(value))
    if abs(value - n) > 1e-9 or n < 0:
        raise ValueError(f"axis {axis!r} needs nonnegative integer values, got {value!r}")
    return n


def evaluate_row(spec: SweepSpec, row: int) -> np.ndarray:
    """Concurrence over the time grid for one axis value (mean over repeats)."""
    value = spec.axis_values[row]
    try:
        sys_p, recipe, state = spec.configuration_for(value)
        times = spec.time_grid.times()
        acc = np.zeros(times.size)
        for repeat in range(spec.repeats):
            env = recipe.build(derive_row_seed(spec.master_seed, row, repeat))
            rhos = reduced_density_series(sys_p, env, state, times)
            acc += np.array([concurrence(rhos[i]) for i in range(times.size)])
        return acc / spec.repeats
    except ValueError as err:
        raise ValueError(f"sweep row {row} ({spec.axis_name} = {value}): {err}") from err


def run_sweep(spec: SweepSpec, workers: int = 1) -> ConcurrenceGrid:
    """Evaluate the whole grid; identical specs give bit-identical grids.

    ``workers`` > 1 distributes rows over processes; assembly is by row
    index, so parallelism never changes the result.
    """
    rows = len(spec.axis_values)
    seeds = tuple(derive_row_seed(spec.master_seed, i) for i in range(rows))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            row_values = list(pool.map(evaluate_row, [spec] * rows, range(rows)))
    else:
        row_values = [evaluate_row(spec, i) for i in range(rows)]
    return ConcurrenceGrid(
        spec=spec,
        axis_values=np.array(spec.axis_values, dtype=float),
        times=spec.time_grid.times(),
        values=np.vstack(row_values),
        row_seeds=seeds,
    )


def max_concurrence(row: np.ndarray) -> float:
    """Largest concurrence reached along one grid row."""
    row = np.asarray(row, dtype=float)
    if row.size == 0:
        raise ValueError("row is empty")
    return float(row.max())


def dissipation_time(times: np.ndarray, row: np.ndarray, threshold: float) -> float | None:
    """First grid time after which the row stays below ``threshold`` for good.

    Returns the time of the last excursion >= threshold (the row is below
    threshold strictly after it), the grid start if the row never reaches
    the threshold, or None if the row still ends at or above it.
    """
    times, row = _checked_row(times, row)
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold!r}")
    above = np.nonzero(row >= threshold)[0]
    if above.size == 0:
        return float(times[0])
    last = int(above[-1])
    if last == times.size - 1:
        return None
    return float(times[last])


def revival_period(times: np.ndarray, row: np.ndarray, tol: float) -> float | None:
    """Smallest grid shift under which the row matches itself within ``tol``.

    Shifts up to half the grid are tried so at least half the row overlaps
    itself; None if no shift matches.
    """
    times, row = _checked_row(times, row)
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    step = (times[-1] - times[0]) / (times.size - 1)
    for k in range(1, times.size // 2 + 1):
        if np.max(np.abs(row[k:] - row[:-k])) <= tol:
            return float(k * step)
    return None


def _checked_row(times: np.ndarray, row: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    times = np.asarray(times, dtype=float)
    row = np.asarray(row, dtype=float)
    if row.size == 0 or times.shape != row.shape:
        raise ValueError(f"need matching nonempty times/row, got {times.shape} vs {row.shape}")
    return times, row
