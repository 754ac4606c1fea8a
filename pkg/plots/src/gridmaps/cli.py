"""The ``render`` command: grid files in, one contour-map image out."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .reader import SchemaError
from .render import PlotJob, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render concurrence grid files (CSV or JSON) as contour maps.")
    parser.add_argument("grids", nargs="+", type=Path, metavar="grid-file",
                        help="grid files; several files become panels of one image")
    parser.add_argument("-o", "--output", type=Path, default=None,
                        help="output image path (default: <first input>.png)")
    parser.add_argument("--panels", default=None, metavar="RxC",
                        help="panel layout, e.g. 1x3 (default: one row)")
    parser.add_argument("--title", default=None, help="figure title")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    output = args.output or args.grids[0].with_suffix(".png")
    job = PlotJob(inputs=list(args.grids), output=output,
                  panels=args.panels, title=args.title)
    try:
        print(render(job))
        return 0
    except (SchemaError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
