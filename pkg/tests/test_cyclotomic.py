from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactmath import I, ONE, ZERO, CycRational, cyc_to_json

orders = st.sampled_from([1, 2, 3, 4, 6, 8, 12])
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyc_numbers(draw):
    order = draw(orders)
    powers = draw(st.dictionaries(st.integers(0, order - 1), rationals, max_size=3))
    return CycRational.from_powers(order, powers)


def test_i_squared():
    assert I * I == -1
    assert I ** 4 == ONE


def test_cube_roots_sum_to_zero():
    z = CycRational.root_of_unity(Fraction(1, 3))
    assert ONE + z + z * z == ZERO


def test_root_of_unity_reduces_order():
    # e(2/4) = −1 рационально
    minus_one = CycRational.root_of_unity(Fraction(2, 4))
    assert minus_one.is_rational()
    assert minus_one.to_fraction() == -1


def test_canonical_form_ignores_presentation():
    a = CycRational.from_powers(12, {3: 1})
    b = CycRational.root_of_unity(Fraction(1, 4))
    assert a == b
    assert a - b == ZERO
    assert (a.order, a.coeffs) == (b.order, b.coeffs)


def test_values_stored_in_smallest_field():
    square = CycRational.root_of_unity(Fraction(1, 8)) ** 2
    assert cyc_to_json(square) == cyc_to_json(I) == {'order': 4, 'coeffs': {'1': '1'}}
    assert CycRational.root_of_unity(Fraction(1, 6)).order == 3
    sqrt3 = CycRational.root_of_unity(Fraction(1, 12)) + CycRational.root_of_unity(Fraction(-1, 12))
    assert sqrt3.order == 12
    assert sqrt3 * sqrt3 == 3


@given(cyc_numbers(), cyc_numbers())
def test_equal_values_have_equal_json(a, b):
    total = a + b
    assert cyc_to_json(total) == cyc_to_json(b + a)
    assert cyc_to_json(CycRational(24, total.lift(24).coeffs)) == cyc_to_json(total)


def test_inverse_and_division():
    z = CycRational.root_of_unity(Fraction(1, 5))
    x = ONE + z * 2
    assert x * x.inverse() == ONE
    assert (x / x) == ONE


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conjugate_of_root_of_unity():
    z = CycRational.root_of_unity(Fraction(1, 8))
    assert z.conjugate() == CycRational.root_of_unity(Fraction(7, 8))
    assert z.has_unit_modulus()
    assert not (ONE + z).has_unit_modulus()


def test_to_fraction_rejects_irrational():
    with pytest.raises(ValueError):
        I.to_fraction()


@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(cyc_numbers())
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == ONE


@given(st.fractions(min_value=0, max_value=1, max_denominator=12), st.fractions(min_value=0, max_value=1, max_denominator=12))
def test_roots_of_unity_multiply(r, s):
    assert CycRational.root_of_unity(r) * CycRational.root_of_unity(s) == CycRational.root_of_unity(r + s)
