"""Command line entry point: ``bohr-lab {radius,sweep,table,verify,figure-data}``.

Exit status is 0 on success, 1 when a computation or check fails and 2 for
usage or validation errors.  Settings are resolved flag > config file >
built-in default; the config file comes from ``--config`` or the
``BOHR_LAB_CONFIG`` environment variable.
"""
from __future__ import annotations

import argparse
import os
import sys

from .functionals import FunctionalKind
from .harmonic import OutOfRangeError, validate_parameter
from .records import FORMATS, OutputRecord, encode, format_number, read_config, write_records
from .reference import M_GRID, REFERENCE_RADII, TABLE_TOLERANCE
from .solver import SolverError, solve, sweep_results
from .verify import inequality_scan, sharpness_check, table_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {"tolerance": 1e-12, "steps": 50, "format": "json"}
CONFIG_ENV = "BOHR_LAB_CONFIG"

FIGURE_KINDS = {1: FunctionalKind.H1, 2: FunctionalKind.H2, 3: FunctionalKind.H3, 4: FunctionalKind.H4}
FIGURE_RANGE = (0.02, 1.29)
FIGURE_POINTS = 256


class UsageError(Exception):
    pass


def _functional(text):
    try:
        return FunctionalKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parameter(m):
    try:
        return validate_parameter(m)
    except OutOfRangeError as exc:
        raise UsageError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohr-lab", description=__doc__.split("\n")[0])
    parser.add_argument("--config", help=f"key = value settings file (default: ${CONFIG_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="solve one radius")
    p.add_argument("--functional", type=_functional, required=True)
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--format", choices=FORMATS)

    p = sub.add_parser("sweep", help="solve over an evenly spaced M range")
    p.add_argument("--functional", type=_functional, required=True)
    p.add_argument("--m-start", type=float, required=True)
    p.add_argument("--m-end", type=float, required=True)
    p.add_argument("--steps", type=int)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--tolerance", type=float)

    p = sub.add_parser("table", help="compare against the reference radii")
    p.add_argument("--functional", type=_functional)
    p.add_argument("--tolerance", type=float)

    p = sub.add_parser("verify", help="sharpness and inequality checks at f_M")
    p.add_argument("--functional", type=_functional)
    p.add_argument("--m", type=float)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--delta", type=float, default=1e-4)
    p.add_argument("--tolerance", type=float)

    p = sub.add_parser("figure-data", help="dense radius-vs-M curve as CSV")
    p.add_argument("--figure", type=int, required=True)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--points", type=int, default=FIGURE_POINTS)
    p.add_argument("--tolerance", type=float)
    return parser


def _settings(args) -> dict:
    settings = dict(DEFAULTS)
    path = args.config or os.environ.get(CONFIG_ENV)
    if path:
        try:
            settings.update(read_config(path))
        except (OSError, ValueError) as exc:
            raise UsageError(f"config: {exc}")
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _emit(records, fmt, out):
    if out:
        write_records(out, records, fmt)
    else:
        sys.stdout.write(encode(records, fmt))


def cmd_radius(args, cfg):
    p = _parameter(args.m)
    res = solve(args.functional, p, cfg["tolerance"])
    _emit([OutputRecord.from_result(res)], cfg["format"], None)
    return EXIT_OK


def cmd_sweep(args, cfg):
    steps = cfg["steps"]
    if steps < 2:
        raise UsageError(f"--steps must be >= 2, got {steps}")
    _parameter(args.m_start)
    _parameter(args.m_end)
    if not args.m_start < args.m_end:
        raise UsageError("--m-start must be smaller than --m-end")
    results = sweep_results(args.functional, args.m_start, args.m_end, steps, cfg["tolerance"])
    _emit([OutputRecord.from_result(r) for r in results], cfg["format"], args.out)
    return EXIT_OK


def cmd_table(args, cfg):
    kinds = [args.functional] if args.functional else list(FunctionalKind)
    tolerance = args.tolerance if args.tolerance is not None else TABLE_TOLERANCE
    ok = True
    for kind in kinds:
        report = table_check(kind, REFERENCE_RADII[kind], tolerance)
        print(f"{kind.value} ({kind.label})")
        print(f"  {'M':>6}  {'computed':>10}  {'reference':>10}  {'deviation':>10}")
        for row in report.rows:
            flag = "ok" if row.deviation <= tolerance else "FAIL"
            print(f"  {row.m:>6g}  {format_number(row.computed):>10}  {format_number(row.expected):>10}"
                  f"  {row.deviation:>10.2e}  {flag}")
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, cfg):
    kinds = [args.functional] if args.functional else list(FunctionalKind)
    grid = [_parameter(args.m)] if args.m is not None else [validate_parameter(m) for m in M_GRID]
    if args.samples < 10:
        raise UsageError("--samples must be >= 10")
    ok = True
    for kind in kinds:
        for p in grid:
            sharp = sharpness_check(kind, p, args.delta, cfg["tolerance"])
            scan = inequality_scan(kind, p, args.samples, cfg["tolerance"])
            print(f"{'PASS' if sharp.passed else 'FAIL'} {kind.value} M={p.m:g} sharpness: "
                  f"lhs(r-{args.delta:g})={sharp.lhs_below:.12g} < d={sharp.distance:.12g} "
                  f"< lhs(r+{args.delta:g})={sharp.lhs_above:.12g}  (r={sharp.root:.9g})")
            print(f"{'PASS' if scan.passed else 'FAIL'} {kind.value} M={p.m:g} scan: "
                  f"max(lhs - d)={scan.max_excess:.3e} at r={scan.argmax:.9g} over {scan.samples} samples")
            ok = ok and sharp.passed and scan.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_figure_data(args, cfg):
    kind = FIGURE_KINDS.get(args.figure)
    if kind is None:
        raise UsageError(f"unknown figure {args.figure}; expected 1, 2, 3 or 4")
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    results = sweep_results(kind, *FIGURE_RANGE, args.points, cfg["tolerance"])
    _emit([OutputRecord.from_result(r) for r in results], "csv", args.out)
    return EXIT_OK


COMMANDS = {
    "radius": cmd_radius,
    "sweep": cmd_sweep,
    "table": cmd_table,
    "verify": cmd_verify,
    "figure-data": cmd_figure_data,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _settings(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"bohr-lab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"bohr-lab {args.command}: solver failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        # tolerance / range validation inside the library
        print(f"bohr-lab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
