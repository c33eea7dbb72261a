import pytest

from circpeak.counting import closed_form_count, count_by_method
from circpeak.exceptions import NotApplicable, PreconditionViolation
from circpeak.utils.tracker import Method, RouteTracker
from tests.conftest import golden_cells, golden_ids


@pytest.mark.parametrize("n, elements, expected", golden_cells(), ids=golden_ids())
def test_every_route_reproduces_the_golden_table(n, elements, expected):
    for method in Method:
        try:
            value = count_by_method(method, n, elements)
        except NotApplicable:
            assert method is Method.CLOSED
            continue
        assert value == expected, f"{method.value} gives {value}"


def test_closed_forms_cover_runs_but_not_scattered_triples():
    assert closed_form_count(8, (5, 6, 7)) == 288
    assert closed_form_count(9, (6, 7, 8)) == 2 * 2880
    assert closed_form_count(8, (3, 5)) == 32
    assert closed_form_count(6, (7,)) == 0
    with pytest.raises(NotApplicable):
        closed_form_count(8, (3, 5, 7))


def test_oracle_route_rejects_elements_above_n():
    with pytest.raises(PreconditionViolation):
        count_by_method(Method.ORACLE, 5, (6,))
    assert count_by_method(Method.DP, 5, (6,)) == 0


def test_tracker_counts_calls():
    tracker = RouteTracker()
    count_by_method(Method.PATHS, 7, (3, 5, 7), tracker)
    count_by_method(Method.PATHS, 7, (3, 5), tracker)
    count_by_method(Method.DP, 7, (3, 5), tracker)
    assert tracker.calls[Method.PATHS] == 2
    assert tracker.calls[Method.DP] == 1
    assert tracker.total_calls == 3
    assert tracker.seconds[Method.ORACLE] == 0
