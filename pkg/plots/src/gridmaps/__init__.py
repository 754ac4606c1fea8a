"""Contour-map rendering for concurrence sweep grids."""

from .reader import GridData, SchemaError, read_grid
from .render import PlotJob, build_figure, render

__version__ = "0.1.0"
