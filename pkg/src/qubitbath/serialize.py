"""Manifest and grid-file (de)serialization.

Every emitted grid is accompanied by a manifest that resolves the full
sweep configuration, seeds included, so the exact same bytes can be
regenerated later from the manifest alone.  Two formats share one schema:

  CSV   <label>.csv with header ``axis,t,concurrence`` (``inv_t`` for a
        reciprocal time axis) plus a sibling <label>.manifest.json
  JSON  <label>.json = {"manifest": ..., "axis": ..., "times": ..., "values": ...}

Numbers in CSV are printed with 17 significant digits and JSON floats use
shortest round-trip repr, so parsing either format recovers exact values.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from .model import InitialState, ProductState, SystemParams, WernerLikeState
from .sweep import ConcurrenceGrid, EnvironmentRecipe, SweepSpec, TimeGrid

FORMATS = ("csv", "json")


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def state_to_dict(state: InitialState) -> dict:
    if isinstance(state, ProductState):
        return {
            "kind": "product",
            "a0_1": _complex_pair(state.a0_1),
            "a1_1": _complex_pair(state.a1_1),
            "a0_2": _complex_pair(state.a0_2),
            "a1_2": _complex_pair(state.a1_2),
        }
    return {"kind": "werner_like", "variant": state.variant, "purity": float(state.purity)}


def state_from_dict(doc: dict) -> InitialState:
    kind = doc.get("kind")
    if kind == "product":
        amps = [complex(*doc[key]) for key in ("a0_1", "a1_1", "a0_2", "a1_2")]
        return ProductState(*amps)
    if kind == "werner_like":
        return WernerLikeState(doc["variant"], float(doc["purity"]))
    raise ValueError(f"unknown initial-state kind {kind!r}")


def recipe_to_dict(recipe: EnvironmentRecipe) -> dict:
    doc = {key: value for key, value in asdict(recipe).items() if value is not None}
    return doc


def recipe_from_dict(doc: dict) -> EnvironmentRecipe:
    return EnvironmentRecipe(**doc)


def spec_to_dict(spec: SweepSpec) -> dict:
    return {
        "system": {key: float(v) for key, v in asdict(spec.system).items()},
        "environment": recipe_to_dict(spec.environment),
        "state": state_to_dict(spec.state),
        "axis": {"name": spec.axis_name, "values": [float(v) for v in spec.axis_values]},
        "time_grid": {
            "t_min": float(spec.time_grid.t_min),
            "t_max": float(spec.time_grid.t_max),
            "samples": int(spec.time_grid.samples),
            "axis_transform": spec.time_grid.axis_transform,
        },
        "master_seed": int(spec.master_seed),
        "repeats": int(spec.repeats),
    }


def spec_from_dict(doc: dict) -> SweepSpec:
    try:
        grid_doc = doc["time_grid"]
        return SweepSpec(
            system=SystemParams(**doc["system"]),
            environment=recipe_from_dict(doc["environment"]),
            state=state_from_dict(doc["state"]),
            axis_name=doc["axis"]["name"],
            axis_values=tuple(doc["axis"]["values"]),
            time_grid=TimeGrid(
                t_min=grid_doc["t_min"],
                t_max=grid_doc["t_max"],
                samples=int(grid_doc["samples"]),
                axis_transform=grid_doc.get("axis_transform", "linear"),
            ),
            master_seed=int(doc["master_seed"]),
            repeats=int(doc.get("repeats", 1)),
        )
    except KeyError as err:
        raise ValueError(f"sweep specification is missing field {err}") from None


def build_manifest(grid: ConcurrenceGrid, label: str, fmt: str, tool_version: str,
                   assumed: dict | None = None) -> dict:
    return {
        "tool": "qubitbath",
        "tool_version": tool_version,
        "label": label,
        "format": fmt,
        "assumed": dict(assumed or {}),
        "sweep": spec_to_dict(grid.spec),
        "row_seeds": [int(s) for s in grid.row_seeds],
    }


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def time_column_name(grid: ConcurrenceGrid) -> str:
    return "inv_t" if grid.spec.time_grid.axis_transform == "reciprocal" else "t"


def grid_to_csv_text(grid: ConcurrenceGrid) -> str:
    lines = [f"axis,{time_column_name(grid)},concurrence"]
    out_times = grid.output_times
    for i, axis_value in enumerate(grid.axis_values):
        row = grid.values[i]
        for j in range(out_times.size):
            lines.append(f"{axis_value:.17g},{out_times[j]:.17g},{row[j]:.17g}")
    return "\n".join(lines) + "\n"


def grid_to_json_doc(grid: ConcurrenceGrid, manifest: dict) -> dict:
    return {
        "manifest": manifest,
        "axis": [float(v) for v in grid.axis_values],
        "times": [float(t) for t in grid.output_times],
        "values": [[float(v) for v in row] for row in grid.values],
    }


def emit_grid(grid: ConcurrenceGrid, label: str, fmt: str, outdir: Path,
              tool_version: str, assumed: dict | None = None) -> list[Path]:
    """Write one grid (plus manifest) under ``outdir``; returns the paths."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = build_manifest(grid, label, fmt, tool_version, assumed)
    if fmt == "json":
        path = outdir / f"{label}.json"
        path.write_text(_json_text(grid_to_json_doc(grid, manifest)))
        return [path]
    data_path = outdir / f"{label}.csv"
    data_path.write_text(grid_to_csv_text(grid))
    manifest_path = outdir / f"{label}.manifest.json"
    manifest_path.write_text(_json_text({"manifest": manifest}))
    return [data_path, manifest_path]


def load_manifest(path: Path) -> dict:
    """Read a manifest from a spec file, a manifest file, or an emitted JSON grid."""
    doc = json.loads(Path(path).read_text())
    if "manifest" in doc:
        doc = doc["manifest"]
    if "sweep" not in doc:
        raise ValueError(f"{path} does not contain a sweep manifest")
    return doc
