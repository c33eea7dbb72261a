from fractions import Fraction

import pytest

from circpeak.counting import (
    RationalPolynomial,
    a_triangle,
    b_triangle,
    cp_empty,
    cp_pair,
    cp_single,
    cp_single_by_split,
    cp_tail_run,
    cp_tail_run_b,
    differential_residual,
    f_polynomial,
)
from circpeak.counting.closed_forms import as_count, tail_run_feasible
from circpeak.counting.routes import closed_form_count
from circpeak.exceptions import DomainError, IntegralityError


def test_empty_set(golden):
    for n in range(3, 9):
        assert cp_empty(n) == golden[n][()] == 2 ** (n - 1)
    with pytest.raises(DomainError):
        cp_empty(2)


def test_singletons(golden):
    for n, cells in golden.items():
        for elements, count in cells.items():
            if len(elements) == 1:
                assert cp_single(n, elements[0]) == count, f"n={n} S={elements}"


def test_singletons_below_three_are_empty():
    assert cp_single(6, 1) == 0
    assert cp_single(6, 2) == 0
    with pytest.raises(DomainError):
        cp_single(6, 7)


@pytest.mark.parametrize("n", range(3, 13))
def test_singleton_by_split(n):
    for i in range(1, n + 1):
        assert cp_single_by_split(n, i) == cp_single(n, i)


def test_pairs(golden):
    for n, cells in golden.items():
        for elements, count in cells.items():
            if len(elements) == 2:
                assert cp_pair(n, *elements) == count, f"n={n} S={elements}"


def test_pair_infeasible_values():
    assert cp_pair(6, 3, 4) == 0
    assert cp_pair(9, 2, 5) == 0


@pytest.mark.parametrize("i, j, n", [(5, 5, 6), (5, 4, 6), (3, 7, 6)])
def test_pair_domain(i, j, n):
    with pytest.raises(DomainError):
        cp_pair(n, i, j)


def test_b_triangle_rows():
    b = b_triangle(4)
    assert b.row(1) == (Fraction(1, 2),)
    assert b.row(2) == (2, Fraction(1, 2))
    assert b.row(3) == (27, 12, 1)
    assert b.row(4) == (768, 486, 96, 3)
    assert b.entry(4, 2) == 486
    with pytest.raises(DomainError):
        b_triangle(0)


def test_a_triangle_rows():
    a = a_triangle(3)
    assert a.row(0) == (Fraction(1, 2),)
    assert a.row(1) == (1, 1)
    assert a.row(2) == (9, 12, 3)
    assert a.row(3) == (192, 324, 144, 12)
    assert a.entry(3, 0) == 192
    assert list(a.cells())[:3] == [(0, 0, Fraction(1, 2)), (1, 0, 1), (1, 1, 1)]
    with pytest.raises(DomainError):
        a_triangle(-1)


@pytest.mark.parametrize("k", range(1, 11))
def test_a_and_b_triangles_agree(k):
    a, b = a_triangle(k), b_triangle(k)
    for i in range(1, k + 1):
        assert a.entry(k, i) == k * (k + 1) * b.entry(k, i)
    assert a.entry(k, 0) == k * (k + 1) * sum((-1) ** (j + 1) * b.entry(k, j) for j in range(1, k + 1))


@pytest.mark.parametrize("n, k, expected", [(3, 1, 2), (5, 2, 12), (7, 3, 144), (8, 3, 2880), (6, 2, 144), (8, 0, 128)])
def test_tail_run_values(n, k, expected):
    assert cp_tail_run(n, k) == expected


def test_tail_run_at_twice_its_length():
    assert not tail_run_feasible(6, 3)
    assert cp_tail_run(6, 3) == 0
    assert cp_tail_run_b(6, 3) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_tail_run_forms_agree(k):
    for n in range(max(3, 2 * k + 1), 2 * k + 12):
        assert cp_tail_run(n, k) == cp_tail_run_b(n, k), f"n={n} k={k}"


@pytest.mark.parametrize("k", range(0, 11))
def test_f_polynomial_identities(k):
    assert f_polynomial(k + 1)(-1) == 0
    assert differential_residual(k) == RationalPolynomial.of([])


def test_f_polynomial_display():
    assert str(f_polynomial(2)) == "9 + 12*x + 3*x^2"
    assert str(f_polynomial(1)) == "1 + x"
    assert f_polynomial(2).degree == 2


def test_rational_polynomial_arithmetic():
    p = RationalPolynomial.of([1, 2, 0, 0])
    q = RationalPolynomial.of([Fraction(1, 2), 0, 1])
    assert p.degree == 1
    assert (p + q).coefficients == (Fraction(3, 2), 2, 1)
    assert (p - p).degree == -1
    assert q(2) == Fraction(9, 2)
    assert q.derivative() == RationalPolynomial.of([0, 2])
    assert p.times_x() == RationalPolynomial.of([0, 1, 2])
    assert str(RationalPolynomial.of([])) == "0"


def test_as_count_requires_nonnegative_integers():
    assert as_count(Fraction(6, 2)) == 3
    with pytest.raises(IntegralityError):
        as_count(Fraction(1, 2))
    with pytest.raises(IntegralityError):
        as_count(-1)


@pytest.mark.parametrize("n", range(3, 14))
def test_closed_forms_double_with_the_order(n):
    assert cp_empty(n + 1) == 2 * cp_empty(n)
    for i in range(1, n + 1):
        assert cp_single(n + 1, i) == 2 * cp_single(n, i), f"n={n} i={i}"
        assert cp_single_by_split(n + 1, i) == 2 * cp_single_by_split(n, i), f"n={n} i={i}"
        for j in range(i + 1, n + 1):
            assert cp_pair(n + 1, i, j) == 2 * cp_pair(n, i, j), f"n={n} S={{{i}, {j}}}"
    for r in range(3, n + 1):
        for k in range(1, r - 1):
            run = tuple(range(r - k + 1, r + 1))
            assert closed_form_count(n + 1, run) == 2 * closed_form_count(n, run), f"n={n} S={run}"
