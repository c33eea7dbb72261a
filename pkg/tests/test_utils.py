from fractions import Fraction

import pytest

from circpeak.exceptions import ParseError, PreconditionViolation
from circpeak.utils import (
    Method,
    RouteTracker,
    Settings,
    file_cache,
    format_rational,
    format_set,
    get_settings,
    override_settings,
    parse_permutation,
    parse_set_spec,
)

CALLS: list[int] = []


@pytest.mark.parametrize(
    "text, expected",
    [("", []), ("  ", []), ("{}", []), ("3,5,8", [3, 5, 8]), (" 8, 3 ,5 ", [3, 5, 8]), ("{4, 5}", [4, 5])],
)
def test_parse_set_spec(text, expected):
    assert parse_set_spec(text) == expected


@pytest.mark.parametrize("text", ["3;5", "a", "3,3", "3.5"])
def test_parse_set_spec_errors(text):
    with pytest.raises(ParseError):
        parse_set_spec(text)


def test_parse_permutation():
    assert parse_permutation("4 8 3 6") == [4, 8, 3, 6]
    assert parse_permutation("4,8,3,6") == [4, 8, 3, 6]
    assert parse_permutation("(1 3 2)") == [1, 3, 2]
    assert parse_permutation("132") == [1, 3, 2]
    assert parse_permutation("7") == [7]
    with pytest.raises(ParseError):
        parse_permutation("1 two 3")


def test_formatting():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(-3) == "-3"
    assert format_set(()) == "{}"
    assert format_set((3, 5)) == "{3, 5}"


def test_settings_defaults():
    settings = Settings()
    assert settings.oracle_limit == 9
    assert settings.dp_limit == 20
    assert settings.genfunc_limit == 14
    assert settings.threads >= 1
    assert settings.disable_cache is False


def test_settings_from_env(monkeypatch):
    monkeypatch.setenv("CIRCPEAK_ORACLE_LIMIT", "7")
    monkeypatch.setenv("CIRCPEAK_DISABLE_CACHE", "true")
    monkeypatch.setenv("CIRCPEAK_THREADS", " ")
    settings = Settings.from_env()
    assert settings.oracle_limit == 7
    assert settings.disable_cache is True


@pytest.mark.parametrize("name, value", [("CIRCPEAK_ORACLE_LIMIT", "13"), ("CIRCPEAK_DP_LIMIT", "10"), ("CIRCPEAK_THREADS", "zero")])
def test_settings_out_of_bounds(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(PreconditionViolation):
        Settings.from_env()


def test_override_settings_restores():
    before = get_settings()
    with override_settings(oracle_limit=4) as settings:
        assert settings.oracle_limit == 4
        assert get_settings().oracle_limit == 4
    assert get_settings() == before
    with pytest.raises(PreconditionViolation):
        with override_settings(threads=0):
            pass
    assert get_settings() == before


def test_method_parse():
    assert Method.parse("dp") is Method.DP
    assert Method.parse(" GenFunc ") is Method.GENFUNC
    with pytest.raises(ValueError):
        Method.parse("fastest")


def test_route_tracker():
    tracker = RouteTracker()
    tracker.update(Method.DP, 0.5)
    tracker.update(Method.DP, 0.25, calls=2)
    with tracker.track(Method.ORACLE):
        pass
    assert tracker.calls[Method.DP] == 3
    assert tracker.seconds[Method.DP] == pytest.approx(0.75)
    assert tracker.calls[Method.ORACLE] == 1
    assert tracker.total_calls == 4
    assert "dp=3" in repr(tracker)
    assert "paths" not in repr(tracker)


@file_cache()
def _square(n: int) -> int:
    CALLS.append(n)
    return n * n


def test_file_cache(tmp_path):
    CALLS.clear()
    with override_settings(cache_dir=str(tmp_path)):
        assert _square(7) == 49
        assert _square(7) == 49
        assert _square(8) == 64
    assert CALLS == [7, 8]
    assert len(list(tmp_path.glob("*.pickle"))) == 2


def test_file_cache_can_be_disabled(tmp_path):
    CALLS.clear()
    with override_settings(cache_dir=str(tmp_path), disable_cache=True):
        _square(5)
        _square(5)
    assert CALLS == [5, 5]
    assert list(tmp_path.glob("*.pickle")) == []


def _first_helper() -> int:
    return 1


def _second_helper() -> int:
    return 2


def _cube(n: int) -> int:
    CALLS.append(n)
    return n**3


def test_file_cache_key_covers_helper_sources(tmp_path):
    CALLS.clear()
    first = file_cache(depends_on=(_first_helper,))(_cube)
    second = file_cache(depends_on=(_second_helper,))(_cube)
    with override_settings(cache_dir=str(tmp_path)):
        assert first(3) == 27
        assert second(3) == 27
        assert first(3) == 27
    assert CALLS == [3, 3]
    assert len(list(tmp_path.glob("*.pickle"))) == 2
