"""
Ground-truth brute force: scan S_n, classify every permutation by its circular peak set.

Also home of the constructive enumerator that grows CP_n(S) from smaller classes by
placing the new maximum, which needs no scan of S_n.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from multiprocessing import Pool

from loguru import logger

from circpeak.core.peaks import feasible, peak_mask
from circpeak.core.types import CountTable, PeakSet, Permutation, elements_to_mask
from circpeak.exceptions import ScaleLimitExceeded
from circpeak.utils.config import get_settings
from circpeak.utils.file_cache import file_cache

# Below this order a worker pool costs more than it saves.
PARALLEL_MIN_N = 8


def check_oracle_scale(n: int, limit: int | None = None) -> None:
    limit = get_settings().oracle_limit if limit is None else limit
    if n > limit:
        raise ScaleLimitExceeded(route="oracle", n=n, limit=limit)


def iter_permutations(n: int, first: int | None = None):
    """S_n in lexicographic order, lazily; restricted to sigma(1) = first when given."""
    letters = tuple(range(1, n + 1))
    if first is None:
        yield from permutations(letters)
        return
    rest = tuple(v for v in letters if v != first)
    for tail in permutations(rest):
        yield (first,) + tail


def _count_block(args: tuple[int, int]) -> dict[int, int]:
    n, first = args
    counts: Counter[int] = Counter()
    for values in iter_permutations(n, first):
        counts[peak_mask(values)] += 1
    return dict(counts)


@lru_cache(maxsize=None)
@file_cache(depends_on=(peak_mask, iter_permutations, _count_block))
def _oracle_masks(n: int, threads: int) -> dict[int, int]:
    blocks = [(n, first) for first in range(1, n + 1)]
    totals: Counter[int] = Counter()
    if threads > 1 and n >= PARALLEL_MIN_N:
        logger.info(f"Scanning S_{n} with {threads} worker processes")
        with Pool(processes=min(threads, n)) as pool:
            for partial in pool.imap_unordered(_count_block, blocks):
                totals.update(partial)
    else:
        logger.info(f"Scanning S_{n} in-process")
        for block in blocks:
            totals.update(_count_block(block))
    logger.debug(f"Oracle table n={n}: {len(totals)} classes")
    return dict(totals)


def oracle_table(n: int) -> CountTable:
    """One pass over S_n producing every class count cp_n(S)."""
    check_oracle_scale(n)
    if n < 1:
        return CountTable(n=1, entries={})
    threads = get_settings().threads
    # Thread count does not change the table, only how fast it is built.
    masks = _oracle_masks(n, 1 if n < PARALLEL_MIN_N else threads)
    return CountTable(n=n, entries=dict(masks))


def oracle_count(s: PeakSet) -> int:
    """cp_n(S) by exhaustive enumeration."""
    check_oracle_scale(s.n)
    return oracle_table(s.n).count(s.elements)


def enumerate_class(s: PeakSet) -> list[Permutation]:
    """All permutations with circular peak set s, in lexicographic order of one-line notation."""
    check_oracle_scale(s.n)
    target = elements_to_mask(s.elements)
    if not feasible(s.n, s.elements):
        return []
    return [Permutation(values=values) for values in iter_permutations(s.n) if peak_mask(values) == target]


def lift_by_new_maximum(p: Permutation) -> tuple[Permutation, Permutation]:
    """((n+1) sigma) and (sigma (n+1)): the two ways a new maximum leaves the peak set unchanged."""
    top = p.n + 1
    return Permutation(values=(top,) + p.values), Permutation(values=p.values + (top,))


def _insert_at(values: tuple[int, ...], gap: int, letter: int) -> tuple[int, ...]:
    return values[:gap] + (letter,) + values[gap:]


@lru_cache(maxsize=256)
def _class_by_insertion(n: int, elements: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if not feasible(n, elements):
        return ()
    if n <= 3:
        target = elements_to_mask(elements)
        return tuple(values for values in iter_permutations(n) if peak_mask(values) == target)

    if not elements or elements[-1] < n:
        smaller = _class_by_insertion(n - 1, elements)
        return tuple(v for values in smaller for v in ((n,) + values, values + (n,)))

    rest = elements[:-1]
    built: list[tuple[int, ...]] = []
    # n lands in an interior gap that does not touch any peak of sigma
    for values in _class_by_insertion(n - 1, rest):
        peak_positions = {index for index, value in enumerate(values) if value in rest}
        for gap in range(1, n - 1):
            if gap - 1 in peak_positions or gap in peak_positions:
                continue
            built.append(_insert_at(values, gap, n))
    # or n sits beside a peak j of sigma, which stops being a peak
    for j in range(3, n):
        if j in rest:
            continue
        extended = tuple(sorted(rest + (j,)))
        for values in _class_by_insertion(n - 1, extended):
            position = values.index(j)
            built.append(_insert_at(values, position, n))
            built.append(_insert_at(values, position + 1, n))
    return tuple(built)


def enumerate_by_insertion(s: PeakSet) -> list[Permutation]:
    """
    CP_n(S) built from smaller classes instead of a scan of S_n.

    Lexicographically sorted, so it agrees element for element with enumerate_class.
    """
    check_oracle_scale(s.n, get_settings().oracle_limit + 2)
    words = sorted(_class_by_insertion(s.n, s.elements))
    return [Permutation(values=values) for values in words]
