import json
from fractions import Fraction

from exactmath import (
    INFINITY,
    I,
    CycRational,
    GradedFJSeries,
    JacobiSeries,
    dumps,
    format_rational,
    graded_from_json,
    graded_to_json,
    parse_rational,
    series_from_json,
    series_to_json,
)


def _sample() -> JacobiSeries:
    zeta = CycRational.root_of_unity(Fraction(1, 3))
    return JacobiSeries.build(
        1,
        [
            (Fraction(-1, 4), (Fraction(1, 2),), I),
            (0, (0,), Fraction(-7, 3)),
            (Fraction(3, 4), (Fraction(-3, 2),), zeta + 1),
        ],
        trunc=2,
    )


def test_rational_format():
    assert format_rational(Fraction(-1)) == "-1"
    assert format_rational(Fraction(3, 6)) == "1/2"
    assert format_rational(INFINITY) == "inf"
    assert parse_rational("−1/2") == Fraction(-1, 2)
    assert parse_rational("inf") == INFINITY


def test_series_round_trip():
    s = _sample()
    restored = series_from_json(json.loads(dumps(series_to_json(s))))
    assert restored == s


def test_graded_round_trip_keeps_offset():
    g = GradedFJSeries(Fraction(1, 2), [_sample(), JacobiSeries.zero(1, trunc=2)])
    restored = graded_from_json(json.loads(dumps(graded_to_json(g))))
    assert restored == g
    assert restored.offset == Fraction(1, 2)


def test_dumps_is_deterministic():
    s = _sample()
    assert dumps(series_to_json(s)) == dumps(series_to_json(series_from_json(series_to_json(s))))
    terms = series_to_json(s)["terms"]
    assert [t["q1"] for t in terms] == ["-1/4", "0", "3/4"]
