from itertools import combinations
from math import factorial

import pytest

from circpeak.core import PeakSet, Permutation, circular_peak_set, feasible
from circpeak.counting import enumerate_by_insertion, enumerate_class, lift_by_new_maximum, oracle_count, oracle_table
from circpeak.counting.oracle import iter_permutations
from circpeak.exceptions import ScaleLimitExceeded
from circpeak.utils.config import override_settings

EXAMPLE_CLASS = {
    "14253", "14352", "24153", "34152", "24351", "34251",
    "15243", "15342", "25143", "35142", "25341", "35241",
}  # fmt: skip


def test_iter_permutations_is_lexicographic():
    assert list(iter_permutations(3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    assert list(iter_permutations(3, first=2)) == [(2, 1, 3), (2, 3, 1)]


@pytest.mark.parametrize("n", range(3, 9))
def test_oracle_sums_to_factorial(n):
    assert oracle_table(n).total() == factorial(n)


@pytest.mark.slow
def test_oracle_sums_to_factorial_at_nine():
    assert oracle_table(9).total() == factorial(9)


@pytest.mark.parametrize("n", range(3, 9))
def test_oracle_matches_golden_table(n, golden):
    table = oracle_table(n)
    assert dict(table.sorted_items()) == golden[n], f"oracle table n={n} differs from the golden table"


@pytest.mark.parametrize("n", [*range(3, 9), pytest.param(9, marks=pytest.mark.slow)])
def test_feasible_iff_nonempty(n):
    table = oracle_table(n)
    for size in range(n + 1):
        for elements in combinations(range(1, n + 1), size):
            assert feasible(n, elements) == (table.count(elements) > 0), f"n={n} S={elements}"


def test_example_class():
    permutations = enumerate_class(PeakSet.of(5, (4, 5)))
    assert {p.word() for p in permutations} == EXAMPLE_CLASS
    assert [p.values for p in permutations] == sorted(p.values for p in permutations)
    assert oracle_count(PeakSet.of(5, (4, 5))) == 12


def test_enumerate_class_small_cases():
    assert [p.word() for p in enumerate_class(PeakSet.of(3))] == ["123", "213", "312", "321"]
    assert [p.word() for p in enumerate_class(PeakSet.of(3, (3,)))] == ["132", "231"]
    assert oracle_count(PeakSet.of(6, (4, 6))) == 72
    assert enumerate_class(PeakSet.of(4, (3, 4))) == []
    for p in enumerate_class(PeakSet.of(6, (3, 6))):
        assert circular_peak_set(p).elements == (3, 6)


def test_lift_by_new_maximum_keeps_the_peak_set():
    p = Permutation.parse("14253")
    for lifted in lift_by_new_maximum(p):
        assert lifted.n == 6
        assert circular_peak_set(lifted) == PeakSet.of(6, (4, 5))


@pytest.mark.parametrize("n", range(3, 8))
def test_insertion_builds_every_class(n):
    for size in range(n + 1):
        for elements in combinations(range(3, n + 1), size):
            s = PeakSet.of(n, elements)
            assert enumerate_by_insertion(s) == enumerate_class(s), f"class of {s} at n={n}"


def test_insertion_reaches_beyond_the_oracle_limit():
    with override_settings(oracle_limit=5):
        with pytest.raises(ScaleLimitExceeded):
            enumerate_class(PeakSet.of(7, (4, 6)))
        built = enumerate_by_insertion(PeakSet.of(7, (4, 6)))
    assert len(built) == 144
    assert all(circular_peak_set(p).elements == (4, 6) for p in built)


def test_oracle_scale_limit():
    with override_settings(oracle_limit=5):
        with pytest.raises(ScaleLimitExceeded) as info:
            oracle_count(PeakSet.of(6))
    assert info.value.route == "oracle"
    assert info.value.limit == 5


def test_parallel_scan_matches_sequential():
    sequential = oracle_table(8)
    with override_settings(threads=2):
        parallel = oracle_table(8)
    assert parallel.entries == sequential.entries
