"""
Complete cp tables by dynamic programming over subsets.

Order n + 1 is built from order n: a set without n + 1 doubles (the new maximum sits at
either end); a set S + {n+1} collects (n - 1 - 2|S|) cp_n(S) plus 2 cp_n(S + {j}) for every
j in [3, n] outside S. Keys are element bitmasks and only feasible keys are stored.
"""

from __future__ import annotations

import threading
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from loguru import logger

from circpeak.core.peaks import feasible, peak_mask
from circpeak.core.types import CountTable, PeakSet, as_elements, elements_to_mask
from circpeak.exceptions import DomainError, ScaleLimitExceeded
from circpeak.utils.config import get_settings

_tables: list[CountTable] = [CountTable(n=3, entries={0: 4, 1 << 3: 2})]
_tables_lock = threading.Lock()


def _next_table(table: CountTable) -> CountTable:
    n = table.n
    top_bit = 1 << (n + 1)
    entries: dict[int, int] = {}
    for mask, count in table.entries.items():
        entries[mask] = 2 * count
    for mask, count in table.entries.items():
        size = bin(mask).count("1")
        if n + 1 < 2 * size + 3:
            # S + {n+1} is infeasible
            continue
        coefficient = n - 1 - 2 * size
        assert coefficient >= 1, f"nonpositive factor {coefficient} for mask {mask:b} at n={n + 1}"
        total = coefficient * count
        for j in range(3, n + 1):
            bit = 1 << j
            if not mask & bit:
                total += 2 * table.entries.get(mask | bit, 0)
        assert total > 0, f"feasible mask {mask | top_bit:b} got count {total} at n={n + 1}"
        entries[mask | top_bit] = total
    return CountTable(n=n + 1, entries=entries)


def check_dp_scale(n: int) -> None:
    limit = get_settings().dp_limit
    if n > limit:
        raise ScaleLimitExceeded(route="dp", n=n, limit=limit)


def dp_tables(n_max: int) -> list[CountTable]:
    """Tables for n = 3..n_max; tables are shared and must not be mutated."""
    if n_max < 3:
        raise DomainError(operation="dp_tables", message=f"n_max must be at least 3, got {n_max}.")
    check_dp_scale(n_max)
    with _tables_lock:
        while _tables[-1].n < n_max:
            _tables.append(_next_table(_tables[-1]))
            logger.debug(f"DP table n={_tables[-1].n}: {len(_tables[-1])} feasible keys")
        return _tables[: n_max - 2]


def dp_table(n: int) -> CountTable:
    return dp_tables(n)[-1]


def dp_count(n: int, s: PeakSet | Iterable[int]) -> int:
    elements = as_elements(s)
    if not feasible(n, elements):
        return 0
    return dp_table(n).count(elements)


def small_order_count(n: int, elements: Sequence[int]) -> int:
    """cp_n(S) for any n >= 0, by brute force below order 3 and by DP from there on."""
    if n >= 3:
        return dp_count(n, elements)
    if n < 0:
        return 0
    target = elements_to_mask(elements)
    return sum(1 for values in permutations(range(1, n + 1)) if peak_mask(values) == target)


def scale_by_doubling(s: PeakSet | Iterable[int], n_target: int, base_count: int | None = None) -> int:
    """
    cp_n(S) = 2^(n - m) cp_m(S) with m = max S (m = 3 for the empty set).

    Args:
        s: The peak set; only its elements are used.
        n_target (int): The order to scale to, at least max S.
        base_count (int | None): cp_m(S) from any route; the DP table is used when omitted.
    """
    elements = as_elements(s)
    m = elements[-1] if elements else 3
    if n_target < m:
        raise DomainError(operation="scale_by_doubling", message=f"n_target={n_target} is below max S={m}.")
    if base_count is None:
        base_count = dp_count(m, elements)
    return base_count << (n_target - m)


def tail_run_recurrence(n: int, k: int, s: PeakSet | Iterable[int], strict: bool = False) -> int:
    """
    cp_n(S + [n-k+1, n]) = 2(k+1) cp_{n-1}(S + [n-k, n-1]) + k(k+1) cp_{n-2}(S + [n-k, n-2]).

    The recurrence is stated for n >= k + 4; below that a warning is logged, and with
    strict=True a DomainError is raised instead of evaluating.
    """
    elements = as_elements(s)
    if k < 0:
        raise DomainError(operation="tail_run_recurrence", message=f"k must be nonnegative, got {k}.")
    if any(e < 3 or e > n - k - 1 for e in elements):
        raise DomainError(operation="tail_run_recurrence", message=f"S={list(elements)} must lie in [3, {n - k - 1}].")
    if n < k + 4:
        if strict:
            raise DomainError(operation="tail_run_recurrence", message=f"n={n} is below k + 4 = {k + 4}.")
        logger.warning(f"tail_run_recurrence evaluated at n={n} < k + 4 = {k + 4}, outside its stated range")
    one_shorter = elements + tuple(range(n - k, n))
    two_shorter = elements + tuple(range(n - k, n - 1))
    return 2 * (k + 1) * small_order_count(n - 1, one_shorter) + k * (k + 1) * small_order_count(n - 2, two_shorter)


def insertion_residuals(previous: CountTable, current: CountTable) -> list[tuple[int, tuple[int, ...]]]:
    """
    Every S + {n} (n = current.n) where the insertion identity fails, as (n, S) pairs.

    Works on any pair of consecutive tables, oracle or DP.
    """
    n = current.n
    if previous.n != n - 1:
        raise DomainError(operation="insertion_residuals", message="tables must be of consecutive orders.")
    failures = []
    for mask in range(0, 1 << n, 8):
        # only subsets of [3, n-1] carry weight; bits 0..2 are never peaks
        if mask & (1 << n):
            continue
        elements = tuple(e for e in range(3, n) if mask >> e & 1)
        size = len(elements)
        expected = (n - 2 - 2 * size) * previous.count(elements)
        expected += sum(2 * previous.count(elements + (j,)) for j in range(3, n) if j not in elements)
        if current.count(elements + (n,)) != expected:
            failures.append((n, elements))
    return failures


def tail_recurrence_residuals(tables: Mapping[int, CountTable]) -> list[tuple[int, tuple[int, ...], int]]:
    """
    Every key of every table (with n - 2 >= 3 also present) where the tail recurrence fails.

    Each key T splits uniquely as S + [n-k+1, n] with n - k not in T; failures come back as (n, S, k).
    """
    failures = []
    for n, table in sorted(tables.items()):
        if n - 1 not in tables or n - 2 not in tables:
            continue
        for mask in table.entries:
            elements = tuple(e for e in range(3, n + 1) if mask >> e & 1)
            k = 0
            while k < len(elements) and elements[-1 - k] == n - k:
                k += 1
            rest = elements[: len(elements) - k]
            one_shorter = rest + tuple(range(n - k, n))
            two_shorter = rest + tuple(range(n - k, n - 1))
            expected = 2 * (k + 1) * tables[n - 1].count(one_shorter) + k * (k + 1) * tables[n - 2].count(two_shorter)
            if table.entries[mask] != expected:
                failures.append((n, rest, k))
    return failures
