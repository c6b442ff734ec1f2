from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactmath import (
    GradedFJSeries,
    JacobiSeries,
    SeriesError,
    first_difference,
    series_exp_graded,
)


@st.composite
def log_terms(draw, K=3):
    grades = [JacobiSeries.zero(1)]
    for _ in range(K):
        terms = draw(st.lists(st.tuples(st.integers(-1, 3), st.integers(-2, 2), st.integers(-3, 3)), max_size=3))
        grades.append(JacobiSeries.build(1, [(e, (k,), c) for e, k, c in terms], trunc=4))
    return GradedFJSeries(0, grades)


def test_exp_of_zero_is_one():
    zero = GradedFJSeries(0, [JacobiSeries.zero(0)] * 4)
    result = series_exp_graded(zero)
    assert result[0] == JacobiSeries.one()
    assert all(g.is_zero() for g in result.grades[1:])


def test_exp_of_linear_term():
    c = Fraction(3)
    s = GradedFJSeries(0, [JacobiSeries.zero(0), JacobiSeries.monomial(0, (), c), JacobiSeries.zero(0), JacobiSeries.zero(0)])
    result = series_exp_graded(s)
    assert result[1].coefficient(0) == c
    assert result[2].coefficient(0) == c * c / 2
    assert result[3].coefficient(0) == c ** 3 / 6


def test_exp_requires_zero_constant_grade():
    s = GradedFJSeries(0, [JacobiSeries.one(), JacobiSeries.zero(0)])
    with pytest.raises(SeriesError):
        series_exp_graded(s)
    with pytest.raises(SeriesError):
        series_exp_graded(GradedFJSeries(1, [JacobiSeries.zero(0)]))


def test_product_adds_offsets_and_keeps_common_grades():
    a = GradedFJSeries(Fraction(1, 2), [JacobiSeries.one(), JacobiSeries.monomial(1)])
    b = GradedFJSeries(-1, [JacobiSeries.monomial(2), JacobiSeries.one(), JacobiSeries.one()])
    c = a * b
    assert c.offset == Fraction(-1, 2)
    assert c.K == 1
    assert c[1] == JacobiSeries.build(0, [(0, (), 1), (3, (), 1)])


def test_offset_mismatch_is_a_difference():
    a = GradedFJSeries(0, [JacobiSeries.one()])
    b = GradedFJSeries(1, [JacobiSeries.one()])
    assert first_difference(a, b) is not None
    with pytest.raises(SeriesError):
        a + b


@given(log_terms(), log_terms())
def test_exp_is_homomorphism(a, b):
    left = series_exp_graded(a + b)
    right = series_exp_graded(a) * series_exp_graded(b)
    assert first_difference(left, right) is None
