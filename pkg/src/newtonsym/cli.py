"""Command line front end.

Subcommands: ``compute``, ``eval``, ``expand``, ``check-perfect``,
``classify``, ``verify``.  Every command is a thin adapter over the
library; outputs are byte-deterministic given identical inputs and flags.

Exit codes: 0 success; 2 mathematical precondition failure (degenerate
grid, vanishing denominator, unclassifiable window); 3 input parse
failure; 4 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify as classify_mod
from . import newton, partitions, perfect, verify
from .errors import (
    DegenerateGrid,
    DenominatorVanishes,
    DivisionByZero,
    GridError,
    InconsistentWindow,
    IndeterminateTuple,
    NotPerfectWindow,
    ParseError,
)
from .exactfield import RatFunc, format_scalar
from .grids import load_grid, load_window
from .sympoly import SymPoly

EXIT_OK = 0
EXIT_MATH = 2
EXIT_PARSE = 3
EXIT_VERIFY = 4

_MATH_ERRORS = (DegenerateGrid, DenominatorVanishes, DivisionByZero, GridError,
                NotPerfectWindow, InconsistentWindow, IndeterminateTuple)


def _scalar_text(value, canonical: bool) -> str:
    if canonical and isinstance(value, RatFunc):
        value = value.reduced(canonical=True)
    return format_scalar(value)


def _poly_lines(poly: SymPoly, canonical: bool, order: str) -> list[str]:
    items = poly.sorted_items()
    if order == "size-lex":
        items.sort(key=lambda kv: (sum(kv[0]), kv[0]))
    return [f"{partitions.format_partition(lam)}\t{_scalar_text(c, canonical)}"
            for lam, c in items]


def _emit(lines: list[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_poly(path: str, grid) -> SymPoly:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        nvars = int(doc["nvars"])
        coeffs = {partitions.parse_partition(k): grid.field.parse(v)
                  for k, v in doc["coeffs"]}
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"cannot read polynomial file {path}: {exc}") from None
    if nvars != grid.n + 1:
        raise ParseError(
            f"polynomial has {nvars} variables but the grid has {grid.n + 1}")
    return SymPoly(grid.field, nvars, coeffs)


def cmd_compute(args) -> int:
    grid = load_grid(args.grid)
    mu = partitions.parse_partition(args.mu)
    poly = newton.interpolation_polynomial(grid, mu)
    _emit(_poly_lines(poly, args.canonical, args.order), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    grid = load_grid(args.grid)
    mu = partitions.parse_partition(args.mu)
    lam = partitions.parse_partition(getattr(args, "lambda"))
    poly = newton.interpolation_polynomial(grid, mu)
    value = poly.eval(grid.knot(lam))
    _emit([_scalar_text(value, args.canonical)], args.out)
    return EXIT_OK


def cmd_expand(args) -> int:
    grid = load_grid(args.grid)
    poly = _load_poly(args.poly, grid)
    expansion = newton.expand(grid, poly)
    lines = [f"{partitions.format_partition(mu)}\t{_scalar_text(c, args.canonical)}"
             for mu, c in expansion.sorted_items()]
    if args.order == "size-lex":
        lines.sort()
    _emit(lines or ["(zero polynomial)"], args.out)
    return EXIT_OK


def cmd_check_perfect(args) -> int:
    grid = load_grid(args.grid)
    report = perfect.extra_vanishing_check(grid, args.degree, jobs=args.jobs)
    _emit(report.summary().splitlines(), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    window = load_window(args.window)
    result = classify_mod.classify_window(window)
    _emit([json.dumps(result.to_json(), indent=2)], args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite()
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
             for name, ok, detail in results]
    failed = [name for name, ok, _ in results if not ok]
    lines.append(f"{len(results) - len(failed)}/{len(results)} identities hold")
    _emit(lines, args.out)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newtonsym",
        description="Newton interpolation of symmetric polynomials on grids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=False, window=False):
        if grid:
            p.add_argument("--grid", required=True, help="grid description file (JSON)")
        if window:
            p.add_argument("--window", required=True, help="window file (JSON)")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--canonical", action="store_true",
                       help="print rational functions in fully reduced form")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads for sweeps (default 1)")
        p.add_argument("--order", choices=["size-revlex", "size-lex"],
                       default="size-revlex",
                       help="listing order for coefficient lines")

    p = sub.add_parser("compute", help="interpolation polynomial for one partition")
    common(p, grid=True)
    p.add_argument("--mu", required=True, help="partition, e.g. [3,1]")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("eval", help="value of an interpolation polynomial at a knot")
    common(p, grid=True)
    p.add_argument("--mu", required=True, help="partition labelling the polynomial")
    p.add_argument("--lambda", required=True, help="partition labelling the knot")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", help="expand a symmetric polynomial in the P basis")
    common(p, grid=True)
    p.add_argument("--poly", required=True, help="polynomial file (JSON)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check-perfect", help="extra-vanishing sweep up to a degree")
    common(p, grid=True)
    p.add_argument("--degree", type=int, required=True, help="degree bound")
    p.set_defaults(func=cmd_check_perfect)

    p = sub.add_parser("classify", help="fit a grid family to a window of values")
    common(p, window=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the exact identity suite")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
