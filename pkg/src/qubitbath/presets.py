"""Figure presets: named sweep configurations for the reference contour maps.

Each preset expands to one or more labeled panels (state variants or
swept-parameter variants that the source figures show side by side).
Captioned parameters are encoded directly; everything the captions leave
open (bath sizes, axis ranges, grid resolution) is a preset default and
is flagged ``assumed`` in the emitted manifest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .model import SystemParams, WernerLikeState, make_unbiased_ps
from .sweep import EnvironmentRecipe, SweepSpec, TimeGrid

#: Master seed used when the command line does not override it.
DEFAULT_MASTER_SEED = 987654321

_FOUR_PI = 4.0 * math.pi

_PS = make_unbiased_ps()
_BELL_0011 = WernerLikeState("w0011", 1.0)
_BELL_0110 = WernerLikeState("w0110", 1.0)

#: Shared defaults, all assumed: unit reference frequencies, one bath qubit,
#: 100 axis samples, 400 time samples on [0, 4*pi].
_SYSTEM = SystemParams(omega_s1=1.0, omega_s2=1.0, omega_s1s2=1.0)
_GRID = TimeGrid(0.0, _FOUR_PI, 400)


def _linspace(lo: float, hi: float, count: int = 100) -> tuple[float, ...]:
    step = (hi - lo) / (count - 1)
    return tuple(lo + step * i for i in range(count))


@dataclass(frozen=True)
class Panel:
    label: str
    spec: SweepSpec
    assumed: dict


def _panel(label: str, assumed: dict, *, system=_SYSTEM, environment, state,
           axis_name, axis_values, time_grid=_GRID) -> Panel:
    spec = SweepSpec(
        system=system,
        environment=environment,
        state=state,
        axis_name=axis_name,
        axis_values=axis_values,
        time_grid=time_grid,
        master_seed=DEFAULT_MASTER_SEED,
    )
    return Panel(label, spec, assumed)


_HOMOG_ASSUMED = {"n": 1, "axis_range": True, "time_grid": True, "omega_reference": 1.0}


def _build_presets() -> dict[str, list[Panel]]:
    homog1 = EnvironmentRecipe(kind="homogeneous_mutual", n=1, gamma=1.0)
    presets: dict[str, list[Panel]] = {}

    # Product state, mutual homogeneous bath, coupling ratio 1: invariance in omega_s1.
    presets["fig2a"] = [_panel(
        "fig2a", {**_HOMOG_ASSUMED, "state": "unbiased product"},
        environment=homog1, state=_PS, axis_name="omega_s1", axis_values=_linspace(0.0, 5.0),
    )]
    presets["fig2b_gamma"] = [_panel(
        "fig2b_gamma", {**_HOMOG_ASSUMED, "state": "unbiased product"},
        environment=homog1, state=_PS, axis_name="gamma", axis_values=_linspace(0.0, 5.0),
    )]
    presets["fig2b_omega"] = [_panel(
        "fig2b_omega", {**_HOMOG_ASSUMED, "state": "unbiased product"},
        environment=homog1, state=_PS, axis_name="omega_s1s2", axis_values=_linspace(0.0, 5.0),
    )]

    # Werner-like states vs purity at coupling ratio gamma/omega_s1s2 = 0.5.
    half_gamma = replace(homog1, gamma=0.5)
    presets["fig3"] = [
        _panel(f"fig3_{variant.variant}", dict(_HOMOG_ASSUMED),
               environment=half_gamma, state=variant,
               axis_name="lambda", axis_values=_linspace(0.0, 1.0))
        for variant in (_BELL_0011, _BELL_0110)
    ]

    # Bell state |00>+|11> under varying bath coupling / varying local coupling.
    presets["fig4"] = [
        _panel("fig4_gamma", dict(_HOMOG_ASSUMED), environment=homog1,
               state=_BELL_0011, axis_name="gamma", axis_values=_linspace(0.0, 5.0)),
        _panel("fig4_omega", dict(_HOMOG_ASSUMED), environment=homog1,
               state=_BELL_0011, axis_name="omega_s1s2", axis_values=_linspace(0.0, 5.0)),
    ]

    # Reciprocal time axis straightens the constant-concurrence bands; N = 1 stated.
    presets["fig5"] = [_panel(
        "fig5", {**_HOMOG_ASSUMED, "state": "unbiased product", "t_range": [0.5, 25.0]},
        environment=homog1, state=_PS, axis_name="gamma", axis_values=_linspace(0.0, 5.0),
        time_grid=TimeGrid(0.5, 25.0, 400, axis_transform="reciprocal"),
    )]

    # White-noise bath vs mean coupling, half-width f = 0.1 stated.
    noise = EnvironmentRecipe(kind="white_noise_mutual", n=10, mu=0.5, f=0.1)
    noise_assumed = {"n": 10, "axis_range": True, "time_grid": True}
    presets["fig6"] = [
        _panel(f"fig6_{name}", dict(noise_assumed), environment=noise, state=state,
               axis_name="mu", axis_values=_linspace(0.0, 5.0))
        for name, state in (("ps", _PS), ("w0011", _BELL_0011), ("w0110", _BELL_0110))
    ]

    # White-noise bath vs bath size at mu = 0.5, f = 0.1 (both stated).
    presets["fig7"] = [
        _panel(f"fig7_{name}", {"axis_range": True, "time_grid": True},
               environment=noise, state=state, axis_name="N",
               axis_values=tuple(float(n) for n in range(1, 101)),
               time_grid=TimeGrid(0.0, 25.0, 400))
        for name, state in (("ps", _PS), ("w0011", _BELL_0011), ("w0110", _BELL_0110))
    ]

    # Distinct baths with gamma_s1 = M * gamma_s2, coupling ratio 1 stated.
    case1 = EnvironmentRecipe(kind="distinct_case1", n1=1, n2=1, gamma_s2=1.0, m=1.0)
    presets["fig8"] = [
        _panel(f"fig8_{name}", {"n1": 1, "n2": 1, "axis_range": True, "time_grid": True},
               environment=case1, state=state, axis_name="M", axis_values=_linspace(0.0, 5.0))
        for name, state in (("ps", _PS), ("w0011", _BELL_0011))
    ]

    # Redistributing a fixed bath total between the two sides (M = 1 stated).
    even_split = EnvironmentRecipe(kind="distinct_homogeneous", n1=4, n2=4,
                                   gamma_s1=1.0, gamma_s2=1.0)
    share_axis = tuple(float(n) for n in range(0, 9))
    share_assumed = {"bath_total": 8, "gamma": 1.0, "time_grid": True}
    presets["fig9a"] = [_panel("fig9a", dict(share_assumed), environment=even_split,
                               state=_PS, axis_name="N1_share", axis_values=share_axis)]
    presets["fig9b"] = [_panel("fig9b", dict(share_assumed), environment=even_split,
                               state=_BELL_0011, axis_name="N1_share", axis_values=share_axis)]

    # Homogeneous bath on S1 plus white noise on S2; f = 0.1*mu and
    # gamma_s1 = M*mu with M = 1, both stated, swept through mu.
    mixed = EnvironmentRecipe(kind="mixed", n1=4, n2=4, mu=0.5,
                              f_scale=0.1, gamma_s1_scale=1.0)
    presets["fig10"] = [
        _panel(f"fig10_{name}", {"n1": 4, "n2": 4, "axis_range": True, "time_grid": True},
               environment=mixed, state=state, axis_name="mu", axis_values=_linspace(0.0, 5.0))
        for name, state in (("ps", _PS), ("w0011", _BELL_0011))
    ]
    return presets


PRESETS = _build_presets()

PRESET_IDS = tuple(sorted(PRESETS))


def preset_panels(preset_id: str) -> list[Panel]:
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise ValueError(f"unknown preset {preset_id!r}; expected one of {', '.join(PRESET_IDS)}") from None
