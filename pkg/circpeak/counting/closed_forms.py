"""
Explicit formulas for cp_n(S).

Sets with at most two elements have closed forms; a tail run [n-k+1, n] is an
alternating sum driven by the exact-rational coefficient triangles b_{k,i} and a_{k,i}.
All triangle arithmetic is done in Fractions and every count is checked to be integral.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from circpeak.exceptions import DomainError, IntegralityError


def _require_order(n: int, operation: str) -> None:
    if n < 3:
        raise DomainError(operation=operation, message=f"n must be at least 3, got {n}.")


def as_count(value: Fraction | int) -> int:
    """Returns value as an int, raising IntegralityError unless it is a nonnegative integer."""
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(value=value)
    return value.numerator


def cp_empty(n: int) -> int:
    """cp_n(empty set) = 2^(n-1): the word falls to 1 and rises after it."""
    _require_order(n, "cp_empty")
    return 1 << (n - 1)


def cp_single(n: int, i: int) -> int:
    """cp_n({i}) = 2^(n-2) (2^(i-2) - 1); 0 for i <= 2."""
    _require_order(n, "cp_single")
    if i > n or i < 1:
        raise DomainError(operation="cp_single", message=f"i={i} must lie in [1, n={n}].")
    if i < 3:
        return 0
    return (1 << (n - 2)) * ((1 << (i - 2)) - 1)


def cp_single_by_split(n: int, i: int) -> int:
    """
    cp_n({i}) by the position of i: with i at position k + 1, the k letters before it and
    the i - k - 1 after it are peak-free words, scaled to order n by the doubling law.
    """
    _require_order(n, "cp_single_by_split")
    if i > n or i < 1:
        raise DomainError(operation="cp_single_by_split", message=f"i={i} must lie in [1, n={n}].")
    if i < 3:
        return 0
    at_order_i = sum(comb(i - 1, k) * (1 << (k - 1)) * (1 << (i - k - 2)) for k in range(1, i - 1))
    return at_order_i << (n - i)


def cp_pair(n: int, i: int, j: int) -> int:
    """
    cp_n({i, j}) = 2^(n-3)(2^(i-2) - 1)(2^(j-i-1) - 1) + 2^(n+j-i-5) * 3(3^(i-2) - 2^(i-1) + 1).

    The second exponent is nonnegative for every 3 <= i < j <= n, and the formula
    vanishes on its own at i = 3, j = 4.
    """
    _require_order(n, "cp_pair")
    if not i < j:
        raise DomainError(operation="cp_pair", message=f"need i < j, got i={i}, j={j}.")
    if j > n or i < 1:
        raise DomainError(operation="cp_pair", message=f"i={i}, j={j} must lie in [1, n={n}].")
    if i < 3:
        return 0
    first = (1 << (n - 3)) * ((1 << (i - 2)) - 1) * ((1 << (j - i - 1)) - 1)
    second = (1 << (n + j - i - 5)) * 3 * (3 ** (i - 2) - (1 << (i - 1)) + 1)
    return first + second


class CoeffTriangle(BaseModel):
    """The b_{k,i} (i in [1, k]) or a_{k,i} (i in [0, k]) triangle, row by row."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["a", "b"]
    rows: dict[int, tuple[Fraction, ...]] = Field(default_factory=dict)

    @property
    def first_index(self) -> int:
        return 0 if self.kind == "a" else 1

    @property
    def k_max(self) -> int:
        return max(self.rows) if self.rows else -1

    def row(self, k: int) -> tuple[Fraction, ...]:
        return self.rows[k]

    def entry(self, k: int, i: int) -> Fraction:
        return self.rows[k][i - self.first_index]

    def cells(self):
        """(k, i, value) triples in row-major order."""
        for k in sorted(self.rows):
            for offset, value in enumerate(self.rows[k]):
                yield k, offset + self.first_index, value


@lru_cache(maxsize=None)
def _b_rows(k_max: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = [(Fraction(1, 2),)]
    for k in range(1, k_max):
        prev = rows[-1]
        head = k * (k + 1) ** 2 * sum((-1) ** (j + 1) * prev[j - 1] for j in range(1, k + 1))
        tail = [Fraction(k * (k + 1) * (k + 2 - i), i) * prev[i - 2] for i in range(2, k + 2)]
        rows.append((head, *tail))
    return tuple(rows)


def b_triangle(k_max: int) -> CoeffTriangle:
    """Rows 1..k_max of b_{k,i} from b_{1,1} = 1/2."""
    if k_max < 1:
        raise DomainError(operation="b_triangle", message=f"k_max must be at least 1, got {k_max}.")
    rows = _b_rows(k_max)
    return CoeffTriangle(kind="b", rows={k: rows[k - 1] for k in range(1, k_max + 1)})


@lru_cache(maxsize=None)
def _a_rows(k_max: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = [(Fraction(1, 2),)]
    for k in range(0, k_max):
        prev = rows[-1]
        # i >= 1 first: a_{k+1,0} is the alternating sum of the finished row
        tail = [Fraction((k + 1) * (k + 2) * (k + 2 - i), i) * prev[i - 1] for i in range(1, k + 2)]
        head = sum((-1) ** (j + 1) * tail[j - 1] for j in range(1, k + 2))
        rows.append((Fraction(head), *tail))
    return tuple(rows)


def a_triangle(k_max: int) -> CoeffTriangle:
    """Rows 0..k_max of a_{k,i} from a_{0,0} = 1/2."""
    if k_max < 0:
        raise DomainError(operation="a_triangle", message=f"k_max must be nonnegative, got {k_max}.")
    rows = _a_rows(k_max)
    return CoeffTriangle(kind="a", rows={k: rows[k] for k in range(0, k_max + 1)})


def tail_run_feasible(n: int, k: int) -> bool:
    """[n-k+1, n] is a feasible peak set at order n iff n >= 2k + 1."""
    return k == 0 or n >= 2 * k + 1


def cp_tail_run(n: int, k: int) -> int:
    """cp_n([n-k+1, n]) = sum_i (-1)^i a_{k,i} (2k + 2 - 2i)^(n - 2k); 0 when infeasible."""
    _require_order(n, "cp_tail_run")
    if k < 0:
        raise DomainError(operation="cp_tail_run", message=f"k must be nonnegative, got {k}.")
    if not tail_run_feasible(n, k):
        return 0
    row = _a_rows(k)[k]
    total = sum((-1) ** i * row[i] * (2 * k + 2 - 2 * i) ** (n - 2 * k) for i in range(k + 1))
    return as_count(total)


def cp_tail_run_b(n: int, k: int) -> int:
    """cp_n([n-k+1, n]) = k(k+1) sum_i (-1)^(i+1) b_{k,i} [(2k+2)^(n-2k) - (2k+2-2i)^(n-2k)]."""
    _require_order(n, "cp_tail_run_b")
    if k < 1:
        raise DomainError(operation="cp_tail_run_b", message=f"k must be at least 1, got {k}.")
    if n < 2 * k:
        return 0
    row = _b_rows(k)[k - 1]
    e = n - 2 * k
    total = k * (k + 1) * sum(
        (-1) ** (i + 1) * row[i - 1] * ((2 * k + 2) ** e - (2 * k + 2 - 2 * i) ** e) for i in range(1, k + 1)
    )
    return as_count(total)


class RationalPolynomial(BaseModel):
    """c_0 + c_1 x + ... + c_d x^d with exact rational coefficients."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: tuple[Fraction, ...] = ()

    @classmethod
    def of(cls, coefficients) -> "RationalPolynomial":
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(coefficients=tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial.of(i * c for i, c in enumerate(self.coefficients) if i > 0)

    def times_x(self) -> "RationalPolynomial":
        return RationalPolynomial.of((Fraction(0), *self.coefficients))

    def scale(self, factor: Fraction | int) -> "RationalPolynomial":
        return RationalPolynomial.of(factor * c for c in self.coefficients)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        padded = [
            (self.coefficients[i] if i < len(self.coefficients) else 0)
            + (other.coefficients[i] if i < len(other.coefficients) else 0)
            for i in range(size)
        ]
        return RationalPolynomial.of(padded)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coeff = str(c) if (i == 0 or c != 1) else ""
            terms.append(f"{coeff}{'*' if coeff and power else ''}{power}")
        return " + ".join(terms)


def f_polynomial(k: int) -> RationalPolynomial:
    """f_k(x) = sum_i a_{k,i} x^i."""
    if k < 0:
        raise DomainError(operation="f_polynomial", message=f"k must be nonnegative, got {k}.")
    return RationalPolynomial.of(_a_rows(k)[k])


def differential_residual(k: int) -> RationalPolynomial:
    """f'_{k+1} - [(k+1)^2 (k+2) f_k - (k+1)(k+2) x f'_k]; the zero polynomial when the identity holds."""
    f_k = f_polynomial(k)
    lhs = f_polynomial(k + 1).derivative()
    rhs = f_k.scale((k + 1) ** 2 * (k + 2)) - f_k.derivative().times_x().scale((k + 1) * (k + 2))
    return lhs - rhs
