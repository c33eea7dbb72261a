import copy
from math import factorial

import pytest

from circpeak.exceptions import ParseError
from circpeak.verify import load_golden_table, parse_table_csv, run_suite
from circpeak.verify.suite import check_golden_table, check_triangles


def test_shipped_fixture(golden):
    assert sorted(golden) == [3, 4, 5, 6, 7, 8]
    assert [len(golden[n]) for n in range(3, 9)] == [2, 3, 6, 10, 20, 35]
    for n, cells in golden.items():
        assert sum(cells.values()) == factorial(n)
    assert golden[8][(3, 5, 8)] == 48
    assert golden[3][()] == 4


def test_fixture_from_a_path(tmp_path):
    path = tmp_path / "tiny.csv"
    path.write_text("n,S,count\n3,,4\n3,3,2\n")
    assert load_golden_table(path) == {3: {(): 4, (3,): 2}}


def test_bad_fixture_rows():
    with pytest.raises(ParseError):
        parse_table_csv("n,S,count\n3,x,4\n")
    with pytest.raises(ParseError):
        parse_table_csv("n,set,count\n3,,4\n")


def test_golden_table_check_names_the_corrupted_cell(golden):
    corrupted = copy.deepcopy(golden)
    corrupted[5][(4, 5)] = 13
    result = check_golden_table(corrupted, max_n=5)
    assert not result.passed
    assert "n=5 S={4, 5}" in result.detail


def test_golden_table_check_notices_missing_cells(golden):
    trimmed = copy.deepcopy(golden)
    del trimmed[4][(4,)]
    result = check_golden_table(trimmed, max_n=4)
    assert not result.passed
    assert "missing" in result.detail


def test_triangle_check():
    assert check_triangles().passed


def test_minimal_suite_passes():
    report = run_suite(3)
    assert report.passed, [f"{r.name}: {r.detail}" for r in report.failures]


@pytest.mark.slow
def test_full_suite_passes():
    report = run_suite(8)
    assert report.passed, [f"{r.name}: {r.detail}" for r in report.failures]
    names = {result.name for result in report.results}
    assert {"golden table", "completeness (oracle)", "completeness (dp)", "path weights", "example class"} <= names


def test_suite_reports_a_corrupted_fixture(golden):
    corrupted = copy.deepcopy(golden)
    corrupted[5][(4, 5)] = 13
    report = run_suite(5, fixture=corrupted)
    assert not report.passed
    assert [result.name for result in report.failures] == ["golden table"]
