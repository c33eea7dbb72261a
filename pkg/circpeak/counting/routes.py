"""One entry point per counting route, keyed by Method, for the CLI and the verify suite."""

from __future__ import annotations

from typing import Callable, Iterable

from circpeak.core.peaks import runs_of
from circpeak.core.types import PeakSet, as_elements
from circpeak.counting.closed_forms import cp_empty, cp_pair, cp_single, cp_tail_run
from circpeak.counting.genfunc import gf_coefficient
from circpeak.counting.oracle import oracle_count
from circpeak.counting.paths import cp_count
from circpeak.counting.recurrences import dp_count
from circpeak.exceptions import NotApplicable
from circpeak.utils.tracker import Method, RouteTracker


def closed_form_count(n: int, s: PeakSet | Iterable[int]) -> int:
    """
    cp_n(S) from the explicit formulas: |S| <= 2, or a single run scaled by the doubling law.

    Raises:
        NotApplicable: S has three or more elements in two or more runs.
    """
    elements = as_elements(s)
    if len(elements) > 2 and len(runs_of(elements)) > 1:
        raise NotApplicable(operation="closed", message=f"no closed form for {list(elements)}.")
    if elements and elements[-1] > n:
        return 0
    if not elements:
        return cp_empty(n)
    if len(elements) == 1:
        return cp_single(n, elements[0])
    if len(elements) == 2:
        return cp_pair(n, elements[0], elements[1])
    run = runs_of(elements)[0]
    if run.r < 3:
        return 0
    return cp_tail_run(run.r, run.k) << (n - run.r)


def _oracle(n: int, elements: tuple[int, ...]) -> int:
    return oracle_count(PeakSet.of(n, elements))


ROUTES: dict[Method, Callable[[int, tuple[int, ...]], int]] = {
    Method.ORACLE: _oracle,
    Method.CLOSED: closed_form_count,
    Method.DP: dp_count,
    Method.GENFUNC: gf_coefficient,
    Method.PATHS: cp_count,
}


def count_by_method(
    method: Method,
    n: int,
    s: PeakSet | Iterable[int],
    tracker: RouteTracker | None = None,
) -> int:
    elements = as_elements(s)
    route = ROUTES[method]
    if tracker is None:
        return route(n, elements)
    with tracker.track(method):
        return route(n, elements)
