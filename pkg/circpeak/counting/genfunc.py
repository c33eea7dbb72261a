"""
Formal generating polynomials g_n = sum over sigma of x_{CP(sigma)} y^{|CP(sigma)|}.

g_{n+1} = [2 + (n-1) x_{n+1} y] g_n + 2 x_{n+1} sum_i dg_n/dx_i - 2 x_{n+1} y^2 dg_n/dy,
starting from g_3 = 4 + 2 x_3 y.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from math import factorial
from typing import Iterable

from loguru import logger

from circpeak.core.peaks import feasible
from circpeak.core.types import PeakSet, as_elements, elements_to_mask, mask_to_elements
from circpeak.exceptions import DomainError, IntegralityError, ScaleLimitExceeded
from circpeak.utils.config import get_settings

Monomial = tuple[int, int]  # (bitmask of x-variables, exponent of y)


class PeakPolynomial:
    """A multilinear polynomial in x_3..x_n and y with integer coefficients."""

    def __init__(self, n: int, terms: dict[Monomial, int] | None = None):
        self.n = n
        self.terms: dict[Monomial, int] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff:
                self.terms[monomial] = coeff

    def coefficient(self, elements: Iterable[int], y_power: int | None = None) -> int:
        elements = tuple(elements)
        power = len(elements) if y_power is None else y_power
        return self.terms.get((elements_to_mask(elements), power), 0)

    def check_invariants(self) -> None:
        """Every y-exponent equals the x-support size and every coefficient is positive."""
        for (mask, power), coeff in self.terms.items():
            if bin(mask).count("1") != power:
                raise IntegralityError(value=(mask_to_elements(mask), power), message="y-exponent differs from |S|.")
            if coeff < 0:
                raise IntegralityError(value=coeff, message="negative coefficient.")

    def partial_x_sum(self) -> dict[Monomial, int]:
        """sum_i dg/dx_i over the variables that occur; x_S y^s -> sum_{i in S} x_{S-i} y^s."""
        result: dict[Monomial, int] = defaultdict(int)
        for (mask, power), coeff in self.terms.items():
            remaining = mask
            while remaining:
                bit = remaining & -remaining
                result[(mask ^ bit, power)] += coeff
                remaining ^= bit
        return result

    def partial_y(self) -> dict[Monomial, int]:
        result: dict[Monomial, int] = defaultdict(int)
        for (mask, power), coeff in self.terms.items():
            if power:
                result[(mask, power - 1)] += power * coeff
        return result

    def specialize(self, x: int = 1, y: int = 1) -> int:
        """Every x_i := x and y := y."""
        return sum(coeff * x ** bin(mask).count("1") * y**power for (mask, power), coeff in self.terms.items())

    def by_cardinality(self) -> list[int]:
        """Coefficients of the x_i := 1 specialisation, indexed by the y-exponent."""
        degree = max((power for _, power in self.terms), default=0)
        counts = [0] * (degree + 1)
        for (_, power), coeff in self.terms.items():
            counts[power] += coeff
        return counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PeakPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"PeakPolynomial(n={self.n}, terms={len(self.terms)})"

    def __str__(self):
        return gf_format(self)


def gf_initial() -> PeakPolynomial:
    """g_3 = 4 + 2 x_3 y."""
    return PeakPolynomial(3, {(0, 0): 4, (1 << 3, 1): 2})


def gf_step(g: PeakPolynomial) -> PeakPolynomial:
    n = g.n
    if n < 3:
        raise DomainError(operation="gf_step", message=f"g must be at order n >= 3, got {n}.")
    top = 1 << (n + 1)
    result: dict[Monomial, int] = defaultdict(int)

    # [2 + (n-1) x_{n+1} y] g_n
    for (mask, power), coeff in g.terms.items():
        result[(mask, power)] += 2 * coeff
        result[(mask | top, power + 1)] += (n - 1) * coeff

    # 2 x_{n+1} sum_i dg_n/dx_i
    for (mask, power), coeff in g.partial_x_sum().items():
        result[(mask | top, power)] += 2 * coeff

    # -2 x_{n+1} y^2 dg_n/dy
    for (mask, power), coeff in g.partial_y().items():
        result[(mask | top, power + 2)] -= 2 * coeff

    stepped = PeakPolynomial(n + 1, {monomial: coeff for monomial, coeff in result.items() if coeff})
    stepped.check_invariants()
    return stepped


_polynomials: list[PeakPolynomial] = [gf_initial()]
_polynomials_lock = threading.Lock()


def check_genfunc_scale(n: int) -> None:
    limit = get_settings().genfunc_limit
    if n > limit:
        raise ScaleLimitExceeded(route="genfunc", n=n, limit=limit)


def gf_polynomial(n: int) -> PeakPolynomial:
    """g_n, iterating gf_step from g_3; intermediate polynomials are kept for reuse."""
    if n < 3:
        raise DomainError(operation="gf_polynomial", message=f"n must be at least 3, got {n}.")
    check_genfunc_scale(n)
    with _polynomials_lock:
        while _polynomials[-1].n < n:
            _polynomials.append(gf_step(_polynomials[-1]))
            logger.debug(f"g_{_polynomials[-1].n}: {len(_polynomials[-1].terms)} monomials")
        return _polynomials[n - 3]


def gf_coefficient(n: int, s: PeakSet | Iterable[int]) -> int:
    """The coefficient of x_S y^|S| in g_n, which is cp_n(S)."""
    elements = as_elements(s)
    g = gf_polynomial(n)
    if not feasible(n, elements):
        return 0
    return g.coefficient(elements)


def peak_count_polynomial(n: int) -> list[int]:
    """Entry d is the number of permutations of [n] with exactly d circular peaks."""
    counts = gf_polynomial(n).by_cardinality()
    if sum(counts) != factorial(n):
        raise IntegralityError(value=sum(counts), message=f"g_{n}(1, 1) differs from {n}!.")
    return counts


def gf_format(g: PeakPolynomial) -> str:
    """Human-readable c·x_{i1}…x_{ik}·y^k, sorted by (|S|, S)."""
    if not g.terms:
        return "0"
    ordered = sorted(g.terms.items(), key=lambda item: (item[0][1], mask_to_elements(item[0][0])))
    parts = []
    for (mask, power), coeff in ordered:
        factors = [str(coeff)]
        factors.extend(f"x_{e}" for e in mask_to_elements(mask))
        if power == 1:
            factors.append("y")
        elif power > 1:
            factors.append(f"y^{power}")
        parts.append("·".join(factors))
    return " + ".join(parts)
