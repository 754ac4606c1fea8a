"""Command-line front end.

Three subcommands:

  preset <id>     run a named figure preset (one grid file per panel)
  sweep <file>    run a sweep described by a manifest/spec JSON file
  verify          run the brute-force equivalence and invariant suites

Grids are written as CSV (with a sibling ``.manifest.json``) or as a
single JSON file with the manifest embedded.  Re-running ``sweep`` on an
emitted manifest reproduces the original data files byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .presets import PRESET_IDS, preset_panels
from .serialize import FORMATS, emit_grid, load_manifest, spec_from_dict
from .sweep import SweepSpec, run_sweep
from .verification import invariant_suites, oracle_equivalence


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitbath",
        description="Two-qubit entanglement dynamics in finite dephasing qubit baths.",
    )
    parser.add_argument("--version", action="version", version=f"qubitbath {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=".", help="output directory (default: .)")
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="grid file format (default: csv, or the manifest's own format)")
    common.add_argument("--seed", type=int, default=None, help="override the master seed")
    common.add_argument("--threads", type=int, default=1, help="parallel row workers")
    common.add_argument("--samples", type=int, default=None, help="override time samples")
    common.add_argument("--t-max", type=float, default=None, help="override the grid end time")

    p_preset = sub.add_parser("preset", parents=[common], help="run a figure preset")
    p_preset.add_argument("preset_id", metavar="preset_id",
                          help=f"one of: {', '.join(PRESET_IDS)}")

    p_sweep = sub.add_parser("sweep", parents=[common], help="run a sweep from a spec/manifest file")
    p_sweep.add_argument("spec_file", type=Path, help="JSON file containing a sweep manifest")

    p_verify = sub.add_parser("verify", help="run oracle-equivalence and invariant suites")
    p_verify.add_argument("--cases", type=int, default=200, help="random oracle comparisons")
    p_verify.add_argument("--seed", type=int, default=20240801, help="seed for the random cases")
    return parser


def _apply_overrides(spec: SweepSpec, args: argparse.Namespace) -> SweepSpec:
    if args.seed is not None:
        spec = replace(spec, master_seed=args.seed)
    grid = spec.time_grid
    if args.samples is not None:
        grid = replace(grid, samples=args.samples)
    if args.t_max is not None:
        grid = replace(grid, t_max=args.t_max)
    if grid is not spec.time_grid:
        spec = replace(spec, time_grid=grid)
    return spec


def _run_and_emit(spec: SweepSpec, label: str, fmt: str, assumed: dict,
                  args: argparse.Namespace) -> list[Path]:
    grid = run_sweep(spec, workers=max(1, args.threads))
    return emit_grid(grid, label, fmt, Path(args.output), __version__, assumed)


def _cmd_preset(args: argparse.Namespace) -> int:
    fmt = args.format or "csv"
    written: list[Path] = []
    for panel in preset_panels(args.preset_id):
        spec = _apply_overrides(panel.spec, args)
        written += _run_and_emit(spec, panel.label, fmt, panel.assumed, args)
    for path in written:
        print(path)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    manifest = load_manifest(args.spec_file)
    spec = _apply_overrides(spec_from_dict(manifest["sweep"]), args)
    fmt = args.format or manifest.get("format") or "csv"
    label = manifest.get("label") or args.spec_file.stem
    for path in _run_and_emit(spec, label, fmt, manifest.get("assumed", {}), args):
        print(path)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = [oracle_equivalence(cases=args.cases, seed=args.seed)]
    results += invariant_suites()
    failures = 0
    for res in results:
        status = "pass" if res.passed else "FAIL"
        detail = f" ({res.detail})" if res.detail else ""
        print(f"{status}  {res.name}: {res.checks - res.failures}/{res.checks}{detail}")
        failures += res.failures
    print(f"verify: {'PASS' if failures == 0 else 'FAIL'} ({failures} failing checks)")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "preset":
            return _cmd_preset(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_verify(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
