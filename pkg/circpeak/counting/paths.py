"""
Weighted circular-peak paths and the general cp_n(S) evaluator built on them.

A path runs from (r, 0) with horizon steps H = (1, 0) and rise steps R = (2, 1). With
shift i, an H step at height y weighs 2i + 2(y + 1) and an R step leaving height y weighs
(y + i + 1)(y + i + 2). w(i, r, n, k) sums the weights of all paths ending at (n, k); it is
the coefficient that peels the last run of a peak set off one position at a time.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from circpeak.core.peaks import feasible, runs_of
from circpeak.core.types import PeakSet, as_elements
from circpeak.counting.closed_forms import cp_empty, cp_tail_run
from circpeak.exceptions import DomainError, PreconditionViolation

HORIZON = "H"
RISE = "R"


class LatticePath(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int = Field(..., description="The path starts at (r, 0)")
    word: str = Field(default="", description="Steps over {H, R}")

    @field_validator("word")
    @classmethod
    def _check_letters(cls, word: str) -> str:
        if set(word) - {HORIZON, RISE}:
            raise ValueError(f"a path word uses only H and R, got {word!r}")
        return word

    @classmethod
    def of(cls, r: int, word: str = "") -> "LatticePath":
        try:
            return cls(r=r, word=word)
        except ValidationError as e:
            raise PreconditionViolation(str(e), value=word, message="Invalid lattice path.") from e

    @property
    def k(self) -> int:
        return self.word.count(RISE)

    @property
    def n(self) -> int:
        return self.r + self.word.count(HORIZON) + 2 * self.k

    @property
    def end(self) -> tuple[int, int]:
        return self.n, self.k

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word or "(empty)"


class PathWeightParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int = Field(default=0, ge=0, description="Shift of the step weights")

    @classmethod
    def of(cls, i: int) -> "PathWeightParams":
        try:
            return cls(i=i)
        except ValidationError as e:
            raise PreconditionViolation(str(e), value=i, message=f"The shift i must be nonnegative, got {i}.") from e


class PathStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    step: str
    height: int
    weight: int
    running: int


def enumerate_paths(r: int, n: int, k: int) -> list[LatticePath]:
    """All paths from (r, 0) to (n, k), in lexicographic order with H < R."""
    horizons = n - r - 2 * k
    if k < 0 or horizons < 0:
        return []
    length = horizons + k
    words = []
    for rises in combinations(range(length), k):
        letters = [HORIZON] * length
        for position in rises:
            letters[position] = RISE
        words.append("".join(letters))
    return [LatticePath.of(r, word) for word in sorted(words)]


def step_weight(i: int, step: str, height: int) -> int:
    if step == HORIZON:
        return 2 * i + 2 * (height + 1)
    return (height + i + 1) * (height + i + 2)


def path_steps(params: PathWeightParams, p: LatticePath) -> list[PathStep]:
    """Per-step weights and the running product."""
    steps = []
    height, running = 0, 1
    for step in p.word:
        weight = step_weight(params.i, step, height)
        running *= weight
        steps.append(PathStep(step=step, height=height, weight=weight, running=running))
        if step == RISE:
            height += 1
    return steps


def path_weight(params: PathWeightParams, p: LatticePath) -> int:
    steps = path_steps(params, p)
    return steps[-1].running if steps else 1


def w_by_enumeration(i: int, r: int, n: int, k: int) -> int:
    params = PathWeightParams.of(i)
    return sum(path_weight(params, p) for p in enumerate_paths(r, n, k))


@lru_cache(maxsize=4096)
def complete_homogeneous(degree: int, values: tuple[int, ...]) -> int:
    """h_degree(values), by adding one variable at a time: h[d] += v * h[d-1]."""
    if degree < 0:
        return 0
    h = [1] + [0] * degree
    for v in values:
        for d in range(1, degree + 1):
            h[d] += v * h[d - 1]
    return h[degree]


@lru_cache(maxsize=65536)
def w_closed(i: int, r: int, n: int, k: int) -> int:
    """2^(n-r-2k) prod_{m<k} (m+i+1)(m+i+2) h_{n-r-2k}(i+1, ..., i+k+1); 0 without paths."""
    PathWeightParams.of(i)
    degree = n - r - 2 * k
    if k < 0 or degree < 0:
        return 0
    rises = 1
    for m in range(k):
        rises *= (m + i + 1) * (m + i + 2)
    return (1 << degree) * rises * complete_homogeneous(degree, tuple(range(i + 1, i + k + 2)))


def _cp_by_stripping(n: int, elements: tuple[int, ...]) -> int:
    if not feasible(n, elements):
        return 0
    if not elements:
        return cp_empty(n)
    top = elements[-1]
    if top < n:
        return _cp_by_stripping(top, elements) << (n - top)
    runs = runs_of(elements)
    last = runs[-1]
    if len(runs) == 1:
        return cp_tail_run(n, last.k)
    return cp_strip_last_run(n, last.k, elements[: len(elements) - last.k])


def cp_strip_last_run(n: int, k: int, s: PeakSet | Iterable[int]) -> int:
    """
    cp_n(S + [n-k+1, n]) = sum_{i=0}^{k} w(i, r, n-i, k-i) cp_{r+i}(S + [r+1, r+i]), r = max S.

    The inner counts are evaluated by stripping their own last run in turn.
    """
    elements = as_elements(s)
    if not elements:
        raise DomainError(operation="cp_strip_last_run", message="S is empty; use cp_tail_run.")
    if k < 0:
        raise DomainError(operation="cp_strip_last_run", message=f"k must be nonnegative, got {k}.")
    if elements[0] < 3 or elements[-1] > n - k - 1:
        raise DomainError(operation="cp_strip_last_run", message=f"S={list(elements)} must lie in [3, {n - k - 1}].")
    if not feasible(n, elements + tuple(range(n - k + 1, n + 1))):
        return 0
    r = elements[-1]
    total = 0
    for i in range(k + 1):
        weight = w_closed(i, r, n - i, k - i)
        if weight:
            total += weight * _cp_by_stripping(r + i, elements + tuple(range(r + 1, r + i + 1)))
    return total


def _nested_run_sum(runs: Sequence, j: int, i_prev: int) -> int:
    m = len(runs)
    if j == m:
        first = runs[0]
        order = first.r + i_prev
        return cp_tail_run(order, first.k + i_prev)
    # factor j pairs run m-j (the one being extended) with run m-j+1 (the one being peeled)
    lower, upper = runs[m - j - 1], runs[m - j]
    total = 0
    for i_j in range(upper.k + i_prev + 1):
        weight = w_closed(i_j, lower.r, upper.r + i_prev - i_j, upper.k + i_prev - i_j)
        if weight:
            total += weight * _nested_run_sum(runs, j + 1, i_j)
    return total


def cp_by_runs(n: int, s: PeakSet | Iterable[int]) -> int:
    """The nested-sum formula over the run decomposition, for sets of at least two runs."""
    elements = as_elements(s)
    runs = runs_of(elements)
    if len(runs) < 2:
        raise DomainError(operation="cp_by_runs", message=f"need at least two runs, got {runs}.")
    if not feasible(n, elements):
        return 0
    return _nested_run_sum(runs.runs, 1, 0) << (n - runs[-1].r)


def cp_count(n: int, s: PeakSet | Iterable[int]) -> int:
    """
    cp_n(S) for arbitrary S without building any table.

    Args:
        n (int): The order, at least 3.
        s: The peak set; elements above n make the count 0.

    Returns:
        int: The exact count.
    """
    if n < 3:
        raise DomainError(operation="cp_count", message=f"n must be at least 3, got {n}.")
    elements = as_elements(s)
    if not feasible(n, elements):
        return 0
    if not elements:
        return cp_empty(n)
    runs = runs_of(elements)
    if len(runs) == 1:
        run = runs[0]
        return cp_tail_run(run.r, run.k) << (n - run.r)
    return cp_by_runs(n, elements)
