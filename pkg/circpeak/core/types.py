from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from circpeak.exceptions import PreconditionViolation
from circpeak.utils.utils import format_set, parse_permutation, parse_set_spec


def elements_to_mask(elements: Iterable[int]) -> int:
    """Bit e of the mask is set iff e is an element."""
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def mask_to_elements(mask: int) -> tuple[int, ...]:
    elements = []
    e = 0
    while mask:
        if mask & 1:
            elements.append(e)
        mask >>= 1
        e += 1
    return tuple(elements)


class Permutation(BaseModel):
    """A bijection of [n] in one-line notation."""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...] = Field(..., description="sigma(1), ..., sigma(n)")

    @model_validator(mode="after")
    def _check_bijection(self) -> "Permutation":
        if not self.values:
            raise ValueError("a permutation needs n >= 1")
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(f"{self.values} is not a permutation of [{len(self.values)}]")
        return self

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        values = tuple(values)
        try:
            return cls(values=values)
        except ValidationError as e:
            raise PreconditionViolation(str(e), value=values, message="Invalid permutation.") from e

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls.of(parse_permutation(text))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.values)

    def __getitem__(self, position: int) -> int:
        """1-based access, sigma(position)."""
        return self.values[position - 1]

    def one_line(self, sep: str = " ") -> str:
        return sep.join(str(v) for v in self.values)

    def word(self) -> str:
        """Compact word such as 14253; only unambiguous for n <= 9."""
        if self.n > 9:
            return self.one_line()
        return "".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return f"({self.one_line()})"


class PeakSet(BaseModel):
    """A candidate circular peak set S of permutations of [n]."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Ambient order")
    elements: tuple[int, ...] = Field(default=(), description="Strictly increasing elements of [1, n]")

    @model_validator(mode="after")
    def _check_elements(self) -> "PeakSet":
        previous = 0
        for e in self.elements:
            if e <= previous:
                raise ValueError(f"elements must be strictly increasing and positive, got {self.elements}")
            previous = e
        if self.elements and self.elements[-1] > self.n:
            raise ValueError(f"element {self.elements[-1]} exceeds n={self.n}")
        return self

    @classmethod
    def of(cls, n: int, elements: Iterable[int] = ()) -> "PeakSet":
        """Builds a PeakSet from unordered elements; duplicates are rejected."""
        items = list(elements)
        if len(set(items)) != len(items):
            raise PreconditionViolation(value=items, message=f"Duplicate elements in {items}.")
        try:
            return cls(n=n, elements=tuple(sorted(items)))
        except ValidationError as e:
            raise PreconditionViolation(str(e), value=items, message="Invalid peak set.") from e

    @classmethod
    def parse(cls, n: int, text: str) -> "PeakSet":
        return cls.of(n, parse_set_spec(text))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "PeakSet":
        return cls.of(n, mask_to_elements(mask))

    @property
    def mask(self) -> int:
        return elements_to_mask(self.elements)

    @property
    def max(self) -> int:
        """Largest element, 0 for the empty set."""
        return self.elements[-1] if self.elements else 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.elements)

    def __contains__(self, e: object) -> bool:
        return e in self.elements

    def __str__(self) -> str:
        return format_set(self.elements)


class Run(BaseModel):
    """The maximal interval [r - k + 1, r] of a set."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(..., description="Run maximum")
    k: int = Field(..., ge=1, description="Run length")

    @property
    def start(self) -> int:
        return self.r - self.k + 1

    def expand(self) -> list[int]:
        return list(range(self.start, self.r + 1))


class RunDecomposition(BaseModel):
    """The type (r_1^k_1, ..., r_m^k_m) of a set, as maximal runs in increasing order."""

    model_config = ConfigDict(frozen=True)

    runs: tuple[Run, ...] = ()

    @model_validator(mode="after")
    def _check_gaps(self) -> "RunDecomposition":
        for left, right in zip(self.runs, self.runs[1:]):
            if left.r > right.r - right.k - 1:
                raise ValueError(f"runs {left} and {right} are not separated by a gap")
        return self

    def expand(self) -> list[int]:
        return [e for run in self.runs for e in run.expand()]

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[Run]:  # type: ignore[override]
        return iter(self.runs)

    def __getitem__(self, index: int) -> Run:
        return self.runs[index]

    def __str__(self) -> str:
        return "(" + ", ".join(f"{run.r}^{run.k}" for run in self.runs) + ")"


class CountTable(BaseModel):
    """cp_n(S) for every feasible S at one order n; absent keys count 0."""

    n: int = Field(..., ge=1)
    entries: dict[int, int] = Field(default_factory=dict, description="Element bitmask -> count")

    def count(self, elements: Iterable[int] | PeakSet) -> int:
        return self.entries.get(elements_to_mask(elements), 0)

    def __getitem__(self, elements: Iterable[int] | PeakSet) -> int:
        return self.count(elements)

    def __len__(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        """Entries ordered by (|S|, S), the layout of the published table."""
        items = [(mask_to_elements(mask), count) for mask, count in self.entries.items() if count]
        return sorted(items, key=lambda item: (len(item[0]), item[0]))

    def as_dict(self) -> dict[frozenset[int], int]:
        return {frozenset(elements): count for elements, count in self.sorted_items()}


def as_elements(s: PeakSet | Sequence[int] | Iterable[int]) -> tuple[int, ...]:
    """Normalizes a PeakSet or any collection of integers to a sorted element tuple."""
    if isinstance(s, PeakSet):
        return s.elements
    items = list(s)
    if len(set(items)) != len(items):
        raise PreconditionViolation(value=items, message=f"Duplicate elements in {items}.")
    return tuple(sorted(items))
