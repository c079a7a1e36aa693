"""Command-line driver: ``bisphere run`` and ``bisphere list-checks``.

Exit status is 0 when every record passes, 1 when at least one fails and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .polyalg import Rational
from .precision import PRECISION_ENV
from .suites import CATALOG, SELECTABLE, SuiteConfig, iter_records, SuiteReport


def _parse_mu(text: str) -> List[Rational]:
    try:
        values = [Rational(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational in {text!r}: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("empty mu list")
    return values


def _parse_suites(text: str) -> tuple:
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in names if s not in SELECTABLE and s != "polyalg"]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown suite(s): {', '.join(bad)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bisphere", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification suites and print NDJSON records")
    run.add_argument("--n", type=int, default=3, help="dimension of the ambient space (default 3)")
    run.add_argument("--mu", type=_parse_mu, default=None,
                     help="comma-separated rationals p/q; default runs the built-in parameter vectors")
    run.add_argument("--max-degree", type=int, default=None,
                     help="largest monomial degree for operator identities (default 8, or 6 when n >= 4)")
    run.add_argument("--suites", type=_parse_suites, default=SELECTABLE,
                     help="comma-separated suites: " + ",".join(SELECTABLE))
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--precision-digits", type=int, default=None,
                     help=f"decimal digits for numeric norms (also ${PRECISION_ENV}; default 50)")
    run.add_argument("--reflection-prefix", choices=("full", "restricted"), default="full")
    run.add_argument("--strict-as-printed", action="store_true",
                     help="use formulas exactly as printed, including known slips")
    run.add_argument("--max-m", type=int, default=None, help="override the largest degree m of wavefunctions")
    run.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so output is byte-stable")
    run.add_argument("--out", default=None, help="write records to this file instead of stdout")

    sub.add_parser("list-checks", help="print the check catalog")
    return parser


def _list_checks(out) -> int:
    for c in CATALOG:
        out.write(f"{c.id:<28} {c.suite:<14} {c.tag:<13} {c.anchor}\n")
    return 0


def _run(args, parser, out) -> int:
    if args.precision_digits is not None and args.precision_digits < 15:
        parser.error("--precision-digits must be at least 15")
    if args.max_m is not None and args.max_m < 0:
        parser.error("--max-m must be non-negative")
    try:
        cfg = SuiteConfig(
            n=args.n, mu=args.mu, max_degree=args.max_degree, suites=args.suites, seed=args.seed,
            precision_digits=args.precision_digits, reflection_prefix=args.reflection_prefix,
            strict_as_printed=args.strict_as_printed, max_m=args.max_m,
        )
    except ValueError as exc:
        parser.error(str(exc))
    sink = open(args.out, "w", encoding="utf-8") if args.out else out
    report = SuiteReport()
    try:
        for record in iter_records(cfg):
            report.records.append(record)
            sink.write(record.to_json(timing=not args.no_timing) + "\n")
            sink.flush()
        for line in report.summary():
            sink.write(line + "\n")
    finally:
        if args.out:
            sink.close()
    return 0 if report.passed else 1


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list-checks":
        return _list_checks(out)
    return _run(args, parser, out)


if __name__ == "__main__":
    sys.exit(main())
