from math import factorial

import pytest

from circpeak.counting import (
    PeakPolynomial,
    dp_table,
    gf_coefficient,
    gf_format,
    gf_initial,
    gf_polynomial,
    gf_step,
    peak_count_polynomial,
)
from circpeak.exceptions import DomainError, IntegralityError, ScaleLimitExceeded
from circpeak.utils.config import override_settings


def test_initial_polynomial():
    g = gf_initial()
    assert g.n == 3
    assert gf_format(g) == "4 + 2·x_3·y"
    assert g.specialize() == 6


def test_one_step():
    g = gf_step(gf_initial())
    assert g.n == 4
    assert g.coefficient(()) == 8
    assert g.coefficient((3,)) == 4
    assert g.coefficient((4,)) == 12
    assert g.coefficient((3, 4)) == 0
    assert len(g.terms) == 3


@pytest.mark.parametrize("n", range(3, 9))
def test_coefficients_match_golden_table(n, golden):
    for elements, count in golden[n].items():
        assert gf_coefficient(n, elements) == count, f"n={n} S={elements}"


@pytest.mark.parametrize("n", range(3, 13))
def test_polynomial_matches_dp(n):
    g = gf_polynomial(n)
    assert {mask: coeff for (mask, _), coeff in g.terms.items()} == dp_table(n).entries
    assert g.specialize() == factorial(n)


def test_peak_count_polynomial():
    assert peak_count_polynomial(3) == [4, 2]
    assert peak_count_polynomial(5) == [16, 88, 16]
    assert sum(peak_count_polynomial(9)) == factorial(9)


def test_derivatives():
    g = gf_initial()
    assert dict(g.partial_y()) == {(1 << 3, 0): 2}
    assert dict(g.partial_x_sum()) == {(0, 1): 2}
    assert g.specialize(x=0) == 4


def test_invariants_reject_mismatched_exponents():
    with pytest.raises(IntegralityError):
        PeakPolynomial(4, {(1 << 3, 2): 1}).check_invariants()
    with pytest.raises(IntegralityError):
        PeakPolynomial(4, {(1 << 3, 1): -1}).check_invariants()


def test_infeasible_and_out_of_range_sets():
    assert gf_coefficient(6, (3, 4)) == 0
    assert gf_coefficient(5, (6,)) == 0


def test_domain_and_scale():
    with pytest.raises(DomainError):
        gf_polynomial(2)
    with override_settings(genfunc_limit=5):
        with pytest.raises(ScaleLimitExceeded):
            gf_polynomial(6)


def test_two_steps():
    g5 = gf_step(gf_step(gf_initial()))
    assert g5.coefficient((4, 5)) == 12
    assert g5.coefficient((3,), y_power=2) == 0
    assert g5.specialize() == 120
    assert gf_coefficient(7, (3, 6, 7)) == 24
    assert gf_coefficient(8, ()) == 128
