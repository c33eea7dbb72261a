"""
circpeak: count and list permutations of [n] by their circular peak set.

Exit codes: 0 success, 1 routes disagree or a verification check failed,
2 usage error, 3 an order above a configured route limit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from loguru import logger

from circpeak.cli.formatting import TABLE_FORMATS, format_path, format_table, format_triangle
from circpeak.core.types import PeakSet
from circpeak.counting.closed_forms import a_triangle, b_triangle
from circpeak.counting.oracle import enumerate_by_insertion, enumerate_class
from circpeak.counting.paths import PathWeightParams, enumerate_paths, path_steps, w_by_enumeration, w_closed
from circpeak.counting.recurrences import dp_table
from circpeak.counting.routes import count_by_method
from circpeak.exceptions import (
    DomainError,
    NotApplicable,
    PreconditionViolation,
    RouteMismatch,
    ScaleLimitExceeded,
)
from circpeak.utils.config import override_settings
from circpeak.utils.tracker import Method, RouteTracker
from circpeak.utils.utils import format_set
from circpeak.verify.fixtures import load_golden_table
from circpeak.verify.suite import run_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SCALE = 3

METHOD_CHOICES = [method.value for method in Method] + ["all"]


def _peak_set(n: int, spec: str) -> PeakSet:
    if n < 3:
        raise DomainError(operation="count", message=f"n must be at least 3, got {n}.")
    return PeakSet.parse(n, spec)


def cmd_count(args: argparse.Namespace) -> int:
    s = _peak_set(args.n, args.set)
    tracker = RouteTracker()
    if args.method != "all":
        print(count_by_method(Method.parse(args.method), s.n, s, tracker))
        logger.debug(repr(tracker))
        return EXIT_OK

    values: dict[str, int] = {}
    for method in Method:
        try:
            values[method.value] = count_by_method(method, s.n, s, tracker)
        except NotApplicable:
            logger.info(f"{method.value} has no formula for {s}")
        except ScaleLimitExceeded as e:
            logger.info(f"{method.value} skipped: {e}")
    for route, value in values.items():
        print(f"{route}: {value}")
    logger.debug(repr(tracker))
    if len(set(values.values())) > 1:
        raise RouteMismatch(values=values)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    s = PeakSet.parse(args.n, args.set)
    permutations = enumerate_by_insertion(s) if args.by_insertion else enumerate_class(s)
    for p in permutations:
        print(p.one_line())
    print(f"# {len(permutations)} permutations with circular peak set {format_set(s.elements)}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    print(format_table(dp_table(args.n), args.format))
    return EXIT_OK


def cmd_coeffs(args: argparse.Namespace) -> int:
    triangle = b_triangle(args.k) if args.kind == "b" else a_triangle(args.k)
    print(format_triangle(triangle, args.format))
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    if args.list:
        params = PathWeightParams.of(args.i)
        for p in enumerate_paths(args.r, args.n, args.k):
            print(format_path(p, path_steps(params, p)))
    print(f"w_enumeration: {w_by_enumeration(args.i, args.r, args.n, args.k)}")
    print(f"w_closed: {w_closed(args.i, args.r, args.n, args.k)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    tracker = RouteTracker()
    fixture = load_golden_table(args.fixture) if args.fixture else None
    report = run_suite(args.max_n, fixture=fixture, tracker=tracker)
    for result in report.results:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status} {result.name}"
        if result.detail:
            line += f": {result.detail}"
        print(line)
    print(f"{len(report.results) - len(report.failures)}/{len(report.results)} checks passed")
    logger.debug(repr(tracker))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circpeak", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--verbose", "-v", action="store_true", help="Log progress and route timings to stderr")
    parser.add_argument("--threads", type=int, default=None, help="Worker processes for the oracle scan")
    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser("count", help="cp_n(S) by one route or all of them")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--set", default="", help='Comma-separated elements, "" for the empty set')
    count.add_argument("--method", choices=METHOD_CHOICES, default="paths")
    count.set_defaults(handler=cmd_count)

    enumerate_ = subparsers.add_parser("enumerate", help="List the permutations with circular peak set S")
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--set", default="")
    enumerate_.add_argument("--by-insertion", action="store_true", help="Grow the class from smaller orders")
    enumerate_.set_defaults(handler=cmd_enumerate)

    table = subparsers.add_parser("table", help="cp_n(S) for every feasible S")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--format", choices=TABLE_FORMATS, default="text")
    table.set_defaults(handler=cmd_table)

    coeffs = subparsers.add_parser("coeffs", help="The b or a coefficient triangle")
    coeffs.add_argument("--kind", choices=("a", "b"), required=True)
    coeffs.add_argument("--k", type=int, required=True, help="Last row to print")
    coeffs.add_argument("--format", choices=TABLE_FORMATS, default="text")
    coeffs.set_defaults(handler=cmd_coeffs)

    paths = subparsers.add_parser("paths", help="w(i, r, n, k) by enumeration and in closed form")
    for name in ("i", "r", "n", "k"):
        paths.add_argument(f"--{name}", type=int, required=True)
    paths.add_argument("--list", action="store_true", help="Print every path with its step weights")
    paths.set_defaults(handler=cmd_paths)

    verify = subparsers.add_parser("verify", help="Cross-validate every route")
    verify.add_argument("--max-n", type=int, default=8)
    verify.add_argument("--fixture", default=None, help="CSV replacing the shipped golden table")
    verify.set_defaults(handler=cmd_verify)
    return parser


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.verbose)

    changes = {} if args.threads is None else {"threads": args.threads}
    try:
        with override_settings(**changes):
            return args.handler(args)
    except RouteMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except ScaleLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCALE
    except (DomainError, PreconditionViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
