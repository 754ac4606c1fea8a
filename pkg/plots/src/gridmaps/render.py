"""Contour-map figures from parsed grids.

Layout conventions follow the source figures: swept parameter on the
vertical axis, (rescaled or reciprocal) time on the horizontal axis,
concurrence as color on a scale pinned to [0, 1] so panels are directly
comparable.  Rendering is deterministic: fixed figure geometry, colormap,
and dpi, so the same inputs and renderer version give identical pixels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reader import GridData, read_grid

CMAP = "viridis"
DPI = 150
PANEL_WIDTH = 4.0
PANEL_HEIGHT = 3.2


@dataclass
class PlotJob:
    """Inputs and layout for one rendered image."""

    inputs: list[Path]
    output: Path
    panels: str | None = None       # "RxC"; default one row
    title: str | None = None
    grids: list[GridData] = field(default_factory=list)

    def layout(self) -> tuple[int, int]:
        count = len(self.inputs)
        if self.panels is None:
            return 1, count
        try:
            rows, cols = (int(part) for part in self.panels.lower().split("x"))
        except ValueError:
            raise ValueError(f"panel layout {self.panels!r} is not of the form RxC") from None
        if rows < 1 or cols < 1 or rows * cols < count:
            raise ValueError(
                f"panel layout {self.panels!r} cannot hold {count} grids")
        return rows, cols


def build_figure(job: PlotJob) -> "matplotlib.figure.Figure":
    """Assemble the figure for a job; callers own closing it."""
    if not job.inputs:
        raise ValueError("no input grids given")
    grids = job.grids or [read_grid(path) for path in job.inputs]
    rows, cols = job.layout()
    fig, axes = plt.subplots(
        rows, cols, figsize=(PANEL_WIDTH * cols + 1.0, PANEL_HEIGHT * rows),
        squeeze=False, constrained_layout=True)
    mesh = None
    for index, grid in enumerate(grids):
        ax = axes[index // cols][index % cols]
        order = np.argsort(grid.times)           # reciprocal axes arrive decreasing
        values = np.clip(grid.values[:, order], 0.0, 1.0)
        mesh = ax.pcolormesh(grid.times[order], grid.axis_values, values,
                             cmap=CMAP, vmin=0.0, vmax=1.0, shading="auto")
        ax.set_xlabel(grid.time_label)
        ax.set_ylabel(grid.axis_name)
        ax.set_title(grid.label, fontsize=10)
    for index in range(len(grids), rows * cols):
        axes[index // cols][index % cols].set_axis_off()
    fig.colorbar(mesh, ax=axes, label="concurrence", fraction=0.08)
    if job.title:
        fig.suptitle(job.title)
    return fig


def render(job: PlotJob) -> Path:
    """Render the job to its output path and return that path."""
    fig = build_figure(job)
    try:
        output = Path(job.output)
        output.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(output, dpi=DPI)
    finally:
        plt.close(fig)
    return output
