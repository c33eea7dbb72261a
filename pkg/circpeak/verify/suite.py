"""
Full cross-validation of every counting route against the oracle, each other and the published tables.

Each check returns a CheckResult instead of raising, so a report always lists every check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable

from loguru import logger
from pydantic import BaseModel, Field

from circpeak.core.peaks import feasible
from circpeak.core.types import PeakSet
from circpeak.counting.closed_forms import (
    a_triangle,
    b_triangle,
    cp_tail_run,
    cp_tail_run_b,
    differential_residual,
    f_polynomial,
)
from circpeak.counting.genfunc import gf_polynomial
from circpeak.counting.oracle import enumerate_class, oracle_table
from circpeak.counting.paths import cp_count, w_by_enumeration, w_closed
from circpeak.counting.recurrences import dp_tables, insertion_residuals, tail_recurrence_residuals
from circpeak.counting.routes import count_by_method
from circpeak.exceptions import CircPeakError, NotApplicable
from circpeak.utils.config import get_settings
from circpeak.utils.tracker import Method, RouteTracker
from circpeak.utils.utils import format_set
from circpeak.verify.fixtures import GoldenTable, load_golden_table

B_ROWS = {
    1: (Fraction(1, 2),),
    2: (Fraction(2), Fraction(1, 2)),
    3: (Fraction(27), Fraction(12), Fraction(1)),
    4: (Fraction(768), Fraction(486), Fraction(96), Fraction(3)),
}
A_ROWS = {
    0: (Fraction(1, 2),),
    1: (Fraction(1), Fraction(1)),
    2: (Fraction(9), Fraction(12), Fraction(3)),
    3: (Fraction(192), Fraction(324), Fraction(144), Fraction(12)),
}
EXAMPLE_CLASS = {
    "14253", "14352", "24153", "34152", "24351", "34251",
    "15243", "15342", "25143", "35142", "25341", "35241",
}  # fmt: skip
IDENTITY_K_MAX = 10
DP_SUM_N_MAX = 14
DP_RECURRENCE_N_MAX = 12
SMOKE_CASES = ((200, (3, 7)), (100, (10, 20, 30)))
SMOKE_DOUBLING_SPAN = 50
# Details list at most this many offending cells.
MAX_DETAIL = 5


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteReport(BaseModel):
    max_n: int
    results: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if not result.passed]


def _result(name: str, problems: list[str]) -> CheckResult:
    detail = "; ".join(problems[:MAX_DETAIL])
    if len(problems) > MAX_DETAIL:
        detail += f"; ... {len(problems) - MAX_DETAIL} more"
    return CheckResult(name=name, passed=not problems, detail=detail)


def check_golden_table(fixture: GoldenTable, max_n: int, tracker: RouteTracker | None = None) -> CheckResult:
    oracle_limit = get_settings().oracle_limit
    problems = []
    for n in sorted(fixture):
        if n > max_n:
            continue
        cells = fixture[n]
        dp_keys = {elements for elements, _ in dp_tables(n)[-1].sorted_items()}
        if set(cells) != dp_keys:
            missing = sorted(dp_keys - set(cells))
            extra = sorted(set(cells) - dp_keys)
            problems.append(f"n={n}: fixture keys differ, missing {missing}, unexpected {extra}")
        for elements, expected in sorted(cells.items()):
            for method in Method:
                if method is Method.ORACLE and n > oracle_limit:
                    continue
                try:
                    value = count_by_method(method, n, elements, tracker)
                except NotApplicable:
                    continue
                if value != expected:
                    problems.append(f"n={n} S={format_set(elements)}: expected {expected}, {method.value}={value}")
    return _result("golden table", problems)


def check_completeness(max_n: int) -> list[CheckResult]:
    oracle_limit = get_settings().oracle_limit
    problems = []
    for n in range(3, min(max_n, oracle_limit) + 1):
        total = oracle_table(n).total()
        if total != factorial(n):
            problems.append(f"oracle n={n}: sum {total} != {factorial(n)}")
    oracle_result = _result("completeness (oracle)", problems)

    problems = []
    for table in dp_tables(max(3, min(max(max_n, DP_SUM_N_MAX), get_settings().dp_limit))):
        if table.total() != factorial(table.n):
            problems.append(f"dp n={table.n}: sum {table.total()} != {factorial(table.n)}")
    return [oracle_result, _result("completeness (dp)", problems)]


def check_triangles() -> CheckResult:
    problems = []
    b = b_triangle(4)
    for k, row in B_ROWS.items():
        if b.row(k) != row:
            problems.append(f"b row {k}: {b.row(k)}")
    a = a_triangle(3)
    for k, row in A_ROWS.items():
        if a.row(k) != row:
            problems.append(f"a row {k}: {a.row(k)}")
    return _result("coefficient triangles", problems)


def check_polynomial_identities() -> CheckResult:
    problems = []
    a = a_triangle(IDENTITY_K_MAX)
    b = b_triangle(IDENTITY_K_MAX)
    for k in range(IDENTITY_K_MAX + 1):
        if f_polynomial(k + 1)(-1) != 0:
            problems.append(f"f_{k + 1}(-1) != 0")
        if differential_residual(k).degree >= 0:
            problems.append(f"differential identity fails at k={k}")
    for k in range(1, IDENTITY_K_MAX + 1):
        scale = k * (k + 1)
        if any(a.entry(k, i) != scale * b.entry(k, i) for i in range(1, k + 1)):
            problems.append(f"a/b bridge fails in row {k}")
        alternating = sum((-1) ** (j + 1) * b.entry(k, j) for j in range(1, k + 1))
        if a.entry(k, 0) != scale * alternating:
            problems.append(f"a_{{{k},0}} bridge fails")
    for k in range(1, 7):
        for n in range(2 * k + 1, 2 * k + 13):
            if n >= 3 and cp_tail_run(n, k) != cp_tail_run_b(n, k):
                problems.append(f"tail run a/b forms differ at n={n}, k={k}")
    return _result("polynomial identities", problems)


def check_path_weights() -> CheckResult:
    problems = []
    r = 3
    for i in range(5):
        for k in range(5):
            for degree in range(9):
                n = r + 2 * k + degree
                enumerated, closed = w_by_enumeration(i, r, n, k), w_closed(i, r, n, k)
                if enumerated != closed:
                    problems.append(f"w({i},{r},{n},{k}): enumeration {enumerated} != closed {closed}")
    return _result("path weights", problems)


def check_example_class(max_n: int) -> CheckResult:
    if max_n < 5:
        return CheckResult(name="example class", passed=True, detail="skipped, max_n < 5")
    words = {p.word() for p in enumerate_class(PeakSet.of(5, (4, 5)))}
    problems = [] if words == EXAMPLE_CLASS else [f"got {sorted(words)}"]
    return _result("example class", problems)


def check_feasibility(max_n: int) -> CheckResult:
    problems = []
    for n in range(3, min(max_n, get_settings().oracle_limit) + 1):
        table = oracle_table(n)
        for size in range(n + 1):
            for elements in combinations(range(1, n + 1), size):
                if feasible(n, elements) != (table.count(elements) > 0):
                    problems.append(f"n={n} S={format_set(elements)}")
    return _result("feasibility criterion", problems)


def check_recurrences(max_n: int) -> list[CheckResult]:
    results = []
    oracle_n = min(max_n, get_settings().oracle_limit)
    sources: list[tuple[str, Callable[[], dict]]] = [
        ("oracle", lambda: {n: oracle_table(n) for n in range(3, oracle_n + 1)}),
        ("dp", lambda: {table.n: table for table in dp_tables(max(3, min(max(max_n, DP_RECURRENCE_N_MAX), get_settings().dp_limit)))}),
    ]
    for label, build in sources:
        tables = build()
        problems = []
        for n in sorted(tables):
            if n - 1 in tables:
                problems.extend(f"insertion identity fails at n={n} S={format_set(s)}" for _, s in insertion_residuals(tables[n - 1], tables[n]))
        problems.extend(f"tail recurrence fails at n={n} S={format_set(s)} k={k}" for n, s, k in tail_recurrence_residuals(tables))
        results.append(_result(f"recurrences ({label})", problems))
    return results


def check_generating_function(max_n: int) -> CheckResult:
    problems = []
    top = max(3, min(max(max_n, DP_RECURRENCE_N_MAX), get_settings().genfunc_limit))
    for table in dp_tables(top):
        g = gf_polynomial(table.n)
        coefficients = {mask: coeff for (mask, _), coeff in g.terms.items()}
        if coefficients != table.entries:
            problems.append(f"g_{table.n} differs from the dp table")
    return _result("generating function", problems)


def check_scalability() -> CheckResult:
    problems = []
    for n, elements in SMOKE_CASES:
        if cp_count(n, elements) <= 0:
            problems.append(f"cp_{n}({format_set(elements)}) is not positive")
        top = elements[-1]
        previous = cp_count(max(top, 3), elements)
        for order in range(max(top, 3) + 1, top + SMOKE_DOUBLING_SPAN + 1):
            current = cp_count(order, elements)
            if current != 2 * previous:
                problems.append(f"doubling fails at n={order} S={format_set(elements)}")
            previous = current
    return _result("scalability smoke", problems)


def run_suite(max_n: int, fixture: GoldenTable | None = None, tracker: RouteTracker | None = None) -> SuiteReport:
    """Runs every check whose parameters fit within max_n and the configured limits."""
    fixture = load_golden_table() if fixture is None else fixture
    report = SuiteReport(max_n=max_n)
    checks: list[tuple[str, Callable[[], CheckResult | list[CheckResult]]]] = [
        ("golden table", lambda: check_golden_table(fixture, max_n, tracker)),
        ("completeness", lambda: check_completeness(max_n)),
        ("coefficient triangles", check_triangles),
        ("polynomial identities", check_polynomial_identities),
        ("path weights", check_path_weights),
        ("example class", lambda: check_example_class(max_n)),
        ("feasibility criterion", lambda: check_feasibility(max_n)),
        ("recurrences", lambda: check_recurrences(max_n)),
        ("generating function", lambda: check_generating_function(max_n)),
        ("scalability smoke", check_scalability),
    ]
    for name, check in checks:
        try:
            outcome = check()
        except CircPeakError as e:
            outcome = CheckResult(name=name, passed=False, detail=str(e))
        for result in outcome if isinstance(outcome, list) else [outcome]:
            logger.debug(f"{result.name}: {'pass' if result.passed else 'FAIL'}")
            report.results.append(result)
    return report
