"""Command-line front end.

Exit codes: 0 ok, 2 validation, 3 domain, 4 numerical integrity, 5 I/O.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .circuit import design_report
from .config import load_config, recipe_names, recipe_text
from .errors import OutputError, QHeatError, ValidationError
from .sweep import emit, run_point, run_sweep

NUMERIC_RTOL = 1e-8


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="YAML run configuration")
    src.add_argument("--recipe", help="name of a shipped recipe (see `recipes`)")


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("csv", "json"), help="override output.format")
    p.add_argument("--out", help="output path (default: output.path, else stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qheatswitch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate the configured operating point")
    _add_source(p)
    _add_output(p)
    p.add_argument("--numeric", action="store_true", help="cross-check against the null-space steady state")

    p = sub.add_parser("sweep", help="evaluate the configured parameter sweep")
    _add_source(p)
    _add_output(p)
    p.add_argument("--numeric", action="store_true", help="cross-check against the null-space steady state")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("design", help="circuit design report (needs a circuit section)")
    _add_source(p)
    p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("validate", help="check a config and print its resolved form")
    _add_source(p)

    p = sub.add_parser("recipes", help="list shipped recipes")
    p.add_argument("--show", metavar="NAME", help="print the recipe file")
    return parser


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8", newline="")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def _report_deviation(deviation: float) -> int:
    print(f"numeric cross-check: max relative deviation {deviation:.3e}", file=sys.stderr)
    return 0 if deviation <= NUMERIC_RTOL else 4


def _run(args) -> int:
    if args.command == "recipes":
        if args.show:
            sys.stdout.write(recipe_text(args.show))
        else:
            for name in recipe_names():
                print(name)
        return 0

    cfg = load_config(args.config, args.recipe)
    for note in cfg.warnings:
        print(f"warning: {note}", file=sys.stderr)

    if args.command == "validate":
        print(json.dumps(cfg.summary(), indent=1))
        return 0

    if args.command == "design":
        if cfg.circuit is None:
            raise ValidationError("design needs a circuit section")
        report = design_report(cfg.circuit, cfg.delta)
        _write(json.dumps(report.to_dict(), indent=1) + "\n", args.out)
        return 0

    fmt = args.format or cfg.output.format
    path = args.out or cfg.output.path
    if args.command == "point":
        row, deviation = run_point(cfg, numeric=args.numeric)
        rows = [row]
    else:
        if cfg.sweep is None:
            raise ValidationError("config has no sweep section")
        if args.jobs < 1:
            raise ValidationError("--jobs must be >= 1")
        rows, deviation = run_sweep(cfg, jobs=args.jobs, numeric=args.numeric)
    text = emit(rows, fmt, path, cfg.output.precision)
    if path is None:
        sys.stdout.write(text)
    return _report_deviation(deviation) if args.numeric else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return _run(args)
    except QHeatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
