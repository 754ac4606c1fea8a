"""Readers for the two grid-file formats emitted by the sweep CLI.

CSV: header ``axis,t,concurrence`` (or ``axis,inv_t,concurrence``), one
record per grid cell, grouped row-major by axis value.  A sibling
``<name>.manifest.json`` is consulted for labels when present.

JSON: ``{"manifest": ..., "axis": [...], "times": [...], "values": [[...]]}``.

Any structural problem raises :class:`SchemaError` naming the offending
column or field; readers never modify their inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

CSV_HEADERS = ("axis,t,concurrence", "axis,inv_t,concurrence")


class SchemaError(ValueError):
    """Input file does not match the grid schema."""


@dataclass
class GridData:
    """One parsed grid: axis values, time coordinates, concurrence matrix."""

    axis_values: np.ndarray
    times: np.ndarray
    values: np.ndarray
    reciprocal: bool = False
    axis_name: str = "axis"
    label: str = ""
    manifest: dict = field(default_factory=dict)

    @property
    def time_label(self) -> str:
        return "1/t" if self.reciprocal else "t"


def read_grid(path: str | Path) -> GridData:
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"{path}: no such file")
    if path.suffix.lower() == ".json":
        return _read_json(path)
    return _read_csv(path)


def _labels_from_manifest(manifest: dict, fallback: str) -> tuple[str, str]:
    axis_name = "axis"
    sweep_doc = manifest.get("sweep", {})
    if isinstance(sweep_doc, dict):
        axis_name = sweep_doc.get("axis", {}).get("name", "axis")
    return axis_name, manifest.get("label", fallback)


def _read_csv(path: Path) -> GridData:
    lines = path.read_text().strip().splitlines()
    if not lines:
        raise SchemaError(f"{path}: empty file")
    header = lines[0].strip()
    if header not in CSV_HEADERS:
        raise SchemaError(
            f"{path}: header {header!r} does not match 'axis,t,concurrence' "
            f"or 'axis,inv_t,concurrence'")
    reciprocal = header == CSV_HEADERS[1]
    columns = header.split(",")
    triples = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise SchemaError(f"{path}: line {lineno}: expected 3 columns, got {len(parts)}")
        row = []
        for column, part in zip(columns, parts):
            try:
                row.append(float(part))
            except ValueError:
                raise SchemaError(
                    f"{path}: line {lineno}: column {column!r}: cannot parse {part!r}") from None
        triples.append(row)
    if not triples:
        raise SchemaError(f"{path}: no data rows")

    data = np.array(triples)
    axis_values, first_index = np.unique(data[:, 0], return_index=True)
    axis_values = data[np.sort(first_index), 0]       # keep file order
    n_axis = axis_values.size
    n_times = data.shape[0] // n_axis
    if n_axis * n_times != data.shape[0]:
        raise SchemaError(f"{path}: {data.shape[0]} records do not tile "
                          f"{n_axis} axis values evenly")
    times = data[:n_times, 1]
    grid = data[:, 2].reshape(n_axis, n_times)
    for i in range(n_axis):
        block = data[i * n_times:(i + 1) * n_times]
        if not np.array_equal(block[:, 1], times):
            raise SchemaError(f"{path}: column 't': rows of axis value "
                              f"{axis_values[i]!r} use a different time grid")
        if not np.all(block[:, 0] == axis_values[i]):
            raise SchemaError(f"{path}: column 'axis': interleaved axis values "
                              f"near record {i * n_times + 2}")

    manifest = {}
    sibling = path.parent / (path.stem + ".manifest.json")
    if sibling.exists():
        try:
            manifest = json.loads(sibling.read_text()).get("manifest", {})
        except (OSError, json.JSONDecodeError):
            manifest = {}
    axis_name, label = _labels_from_manifest(manifest, path.stem)
    return GridData(axis_values, times, grid, reciprocal, axis_name, label, manifest)


def _read_json(path: Path) -> GridData:
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path}: not valid JSON ({err})") from None
    for key in ("manifest", "axis", "times", "values"):
        if key not in doc:
            raise SchemaError(f"{path}: missing field {key!r}")
    try:
        axis_values = np.asarray(doc["axis"], dtype=float)
        times = np.asarray(doc["times"], dtype=float)
        values = np.asarray(doc["values"], dtype=float)
    except (TypeError, ValueError) as err:
        raise SchemaError(f"{path}: non-numeric grid data ({err})") from None
    if axis_values.ndim != 1 or times.ndim != 1:
        raise SchemaError(f"{path}: fields 'axis' and 'times' must be flat lists")
    if values.shape != (axis_values.size, times.size):
        raise SchemaError(
            f"{path}: field 'values' has shape {values.shape}, expected "
            f"({axis_values.size}, {times.size})")
    manifest = doc["manifest"] if isinstance(doc["manifest"], dict) else {}
    grid_doc = manifest.get("sweep", {}).get("time_grid", {})
    reciprocal = grid_doc.get("axis_transform") == "reciprocal"
    axis_name, label = _labels_from_manifest(manifest, path.stem)
    return GridData(axis_values, times, values, reciprocal, axis_name, label, manifest)
