"""Command line entry point: ``cremonaq run --suite all --format md``."""

from __future__ import annotations

import argparse
import sys

from .checks import SUITES
from .report import render_report, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cremonaq", description="Exact verification suites for finite Cremona subgroups over Q.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a verification suite")
    run.add_argument("--suite", choices=("all",) + SUITES, default="all")
    run.add_argument("--format", choices=("json", "md", "markdown"), default="md")
    run.add_argument("--seed", type=int, default=1)
    run.add_argument("--cap", type=int, default=100_000, help="closure size cap")
    run.add_argument("--out", default="-", help="output file (default stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cap < 1:
        parser.print_usage(sys.stderr)
        print("cremonaq: error: --cap must be positive", file=sys.stderr)
        return 2
    report = run_suite(args.suite, seed=args.seed, cap=args.cap)
    text = render_report(report, args.format)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if report.ok else 1
