"""Command-line front end.

Subcommands:
  sweep        evaluate one model over a parameter grid, emit CSV/JSON
  verify       run the identity check suite; exit 0 iff all pass
  bloch-omega  solid angle of a geodesic polygon read from a file/stdin

Exit status: 0 success, 1 usage or configuration error, 2 verification
failure.  Configuration comes from an optional flat JSON file plus
flags; flags win key by key.  No environment variables are consulted.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bloch import GeodesicPolygon, polygon_solid_angle
from .sweep import ConfigError, emit, parse_config, run_sweep
from .verify import exit_status, format_report, run_checks

__all__ = ["main", "entry_point"]

USAGE_ERROR = 1
VERIFY_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # verification failures here, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mixedphase", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sweep = sub.add_parser("sweep", help="evaluate a model over a parameter grid")
    sweep.add_argument("--config", help="flat JSON config file; flags override its keys")
    sweep.add_argument("--model", choices=["su2", "bloch"])
    sweep.add_argument("--sweep", help="name of the swept parameter")
    sweep.add_argument("--start", type=float)
    sweep.add_argument("--end", type=float)
    sweep.add_argument("--steps", type=int)
    sweep.add_argument("--t", type=float)
    sweep.add_argument("--omega1", type=float)
    sweep.add_argument("--omega2", type=float)
    sweep.add_argument("--phi", type=float)
    sweep.add_argument("--beta", type=float)
    sweep.add_argument("--omega-field", type=float)
    sweep.add_argument("--r", type=float)
    sweep.add_argument("--omega-solid", type=float)
    sweep.add_argument("--format", choices=["csv", "json"])
    sweep.add_argument("--output", help="output path, or '-' for stdout")
    sweep.add_argument("--degeneracy-tol", type=float)

    verify = sub.add_parser("verify", help="run the identity check suite")
    verify.add_argument("--tol", action="append", default=[], metavar="CHECK=VALUE",
                        help="override one check's tolerance (repeatable)")
    verify.add_argument("--seed", type=int, default=0)

    omega = sub.add_parser("bloch-omega",
                           help="solid angle of a geodesic polygon (one 'x y z' vertex per line)")
    omega.add_argument("source", nargs="?", default="-",
                       help="vertex file, or '-' for stdin (default)")
    return parser


_SWEEP_FLAG_KEYS = (
    "model", "sweep", "start", "end", "steps", "t", "omega1", "omega2", "phi",
    "beta", "omega_field", "r", "omega_solid", "format", "output", "degeneracy_tol",
)


def _cmd_sweep(args) -> int:
    file_values = {}
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                file_values = json.load(handle)
        except OSError as exc:
            print(f"error: cannot read config {args.config!r}: {exc}", file=sys.stderr)
            return USAGE_ERROR
        except json.JSONDecodeError as exc:
            print(f"error: config {args.config!r} is not valid JSON: {exc}", file=sys.stderr)
            return USAGE_ERROR
        if not isinstance(file_values, dict):
            print(f"error: config {args.config!r} must be a flat JSON object", file=sys.stderr)
            return USAGE_ERROR
    overrides = {key: getattr(args, key) for key in _SWEEP_FLAG_KEYS
                 if getattr(args, key) is not None}
    try:
        cfg = parse_config(file_values, overrides)
        emit(run_sweep(cfg), cfg.fmt, cfg.output, cfg.model)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def _cmd_verify(args) -> int:
    overrides = {}
    for item in args.tol:
        name, sep, value = item.partition("=")
        if not sep:
            print(f"error: --tol expects CHECK=VALUE, got {item!r}", file=sys.stderr)
            return USAGE_ERROR
        try:
            overrides[name] = float(value)
        except ValueError:
            print(f"error: --tol value for {name!r} is not a number: {value!r}", file=sys.stderr)
            return USAGE_ERROR
    try:
        results = run_checks(seed=args.seed, tolerances=overrides)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(format_report(results))
    return exit_status(results)


def _cmd_bloch_omega(args) -> int:
    try:
        if args.source == "-":
            text = sys.stdin.read()
        else:
            with open(args.source, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.source!r}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    vertices = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            print(f"error: line {lineno}: expected 3 coordinates, got {len(parts)}",
                  file=sys.stderr)
            return USAGE_ERROR
        try:
            vertices.append([float(p) for p in parts])
        except ValueError:
            print(f"error: line {lineno}: not a numeric triple: {line.strip()!r}",
                  file=sys.stderr)
            return USAGE_ERROR
    try:
        omega = polygon_solid_angle(GeodesicPolygon(np.array(vertices, dtype=float)))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(f"{omega:.17g}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_bloch_omega(args)


def entry_point() -> None:
    raise SystemExit(main())
