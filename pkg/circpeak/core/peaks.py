from __future__ import annotations

from typing import Iterable, Sequence

from circpeak.core.types import PeakSet, Permutation, Run, RunDecomposition, as_elements
from circpeak.exceptions import PreconditionViolation


def peak_mask(values: Sequence[int]) -> int:
    """Bitmask of the interior peak values of a one-line word; the hot loop of the oracle."""
    mask = 0
    for a, b, c in zip(values, values[1:], values[2:]):
        if a < b > c:
            mask |= 1 << b
    return mask


def peak_values(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(b for a, b, c in zip(values, values[1:], values[2:]) if a < b > c))


def circular_peak_set(p: Permutation) -> PeakSet:
    """
    The set of values sigma(i), 2 <= i <= n - 1, with sigma(i-1) < sigma(i) > sigma(i+1).

    Positions n and 1 are not neighbours: there is no wraparound.
    """
    return PeakSet(n=p.n, elements=peak_values(p.values))


def feasible(n: int, elements: Sequence[int]) -> bool:
    """True iff the j-th smallest element i_j satisfies i_j >= 2j + 1 and every element is at most n."""
    if elements and elements[-1] > n:
        return False
    return all(e >= 2 * j + 1 for j, e in enumerate(elements, start=1))


def is_feasible(s: PeakSet) -> bool:
    """Whether some permutation of [s.n] has circular peak set s."""
    return feasible(s.n, s.elements)


def runs_of(elements: Sequence[int]) -> RunDecomposition:
    runs: list[Run] = []
    start = previous = None
    for e in elements:
        if previous is not None and e == previous + 1:
            previous = e
            continue
        if previous is not None:
            runs.append(Run(r=previous, k=previous - start + 1))
        start = previous = e
    if previous is not None:
        runs.append(Run(r=previous, k=previous - start + 1))
    return RunDecomposition(runs=tuple(runs))


def run_decomposition(s: PeakSet | Iterable[int]) -> RunDecomposition:
    """The unique decomposition of s into maximal runs of consecutive integers."""
    return runs_of(as_elements(s))


def reduce_subsequence(p: Permutation, positions: Sequence[int]) -> Permutation:
    """
    Relabels the values at the given 1-based positions order-isomorphically onto [k].

    Args:
        p (Permutation): The source permutation.
        positions (Sequence[int]): Strictly increasing, nonempty positions in [1, n].

    Returns:
        Permutation: red_sigma(tau) for the subsequence tau picked out by positions.
    """
    positions = list(positions)
    if not positions:
        raise PreconditionViolation(value=positions, message="At least one position is required.")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise PreconditionViolation(value=positions, message=f"Positions must be strictly increasing: {positions}.")
    if positions[0] < 1 or positions[-1] > p.n:
        raise PreconditionViolation(value=positions, message=f"Positions must lie in [1, {p.n}]: {positions}.")

    picked = [p[position] for position in positions]
    rank = {value: index for index, value in enumerate(sorted(picked), start=1)}
    return Permutation(values=tuple(rank[value] for value in picked))
