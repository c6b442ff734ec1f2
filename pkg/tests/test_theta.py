from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from borcherds import (
    check_local_product,
    check_translate_law,
    factor_monomials,
    local_borcherds_product,
    theta_an,
    theta_translate,
    translation_multiplier,
)
from exactmath import CycRational, JacobiSeries
from modforms import VectorValuedForm, classical_series, jacobi_theta1
from pipeline.handlers import DEFAULT_ETAS, DEFAULT_SHIFTS

HALF = Fraction(1, 2)


def test_theta_11_of_j744(rank0, j744):
    assert theta_an(j744, rank0, 1, 1, 3) == classical_series('j744', 3)


def test_theta_12_is_rescaled(rank0, j744):
    theta = theta_an(j744, rank0, 1, 2, 5)
    assert theta.coefficient(-2) == 1
    assert theta.coefficient(2) == 196884
    assert theta.coefficient(1) == 0
    assert theta.trunc == 5


def test_theta_of_zero_form(rank0):
    zero = VectorValuedForm(0, rank0, lambda order: {})
    theta = theta_an(zero, rank0, 1, 1, 4)
    assert theta.is_zero()
    assert theta.trunc == 4


def test_theta_11_of_phi01(a1, phi01):
    theta = theta_an(phi01, a1, 1, 1, 2)
    assert theta.exponent_slice(0) == {(-HALF,): 1, (HALF,): 1, (Fraction(0),): 10}
    assert theta.min_exp == 0


def test_factor_monomials_respect_bound(a1, phi01):
    monomials = factor_monomials(phi01, a1, 1, 2)
    assert monomials
    assert all(f.exponent < 2 for f in monomials)
    assert all(f.character() == 1 for f in monomials)


def test_theta_an_rejects_bad_indices(a1, phi01):
    with pytest.raises(ValueError):
        theta_an(phi01, a1, 0, 1, 2)
    with pytest.raises(ValueError):
        theta_an(phi01, a1, 1, 0, 2)


def test_translate_at_zero_is_theta1():
    assert theta_translate(0, 0, 4) == jacobi_theta1(4)


def test_multiplier_for_unit_shift():
    eta1 = Fraction(1, 3)
    assert translation_multiplier(eta1, Fraction(1, 5), 0, 1) == -CycRational.root_of_unity(eta1 / 2)
    assert translation_multiplier(0, 0, 1, 0) == -1


@pytest.mark.parametrize("eta", DEFAULT_ETAS)
@pytest.mark.parametrize("shift", DEFAULT_SHIFTS)
def test_translate_law(eta, shift):
    assert check_translate_law(Fraction(eta[0]), Fraction(eta[1]), shift[0], shift[1], 4).holds


@settings(max_examples=8)
@given(
    eta1=st.fractions(min_value=-HALF, max_value=HALF, max_denominator=6),
    eta2=st.fractions(min_value=-HALF, max_value=HALF, max_denominator=6),
    shift=st.sampled_from([(0, 1), (1, 0), (1, 1)]),
)
def test_translate_law_random_characteristics(eta1, eta2, shift):
    check = check_translate_law(eta1, eta2, shift[0], shift[1], 3)
    assert check.holds, check.describe()


@pytest.mark.parametrize("x0, lam21, lam22, order", [
    ((HALF,), 0, 0, 10),
    ((Fraction(1),), Fraction(1, 3), Fraction(1, 4), 10),
    ((Fraction(1), -HALF), HALF, 0, 10),
    ((Fraction(1, 3),), Fraction(1, 4), Fraction(2, 3), 10),
])
def test_local_product(x0, lam21, lam22, order):
    check = check_local_product(x0, lam21, lam22, order)
    assert check.holds, check.describe()
    assert check.window >= order


def test_local_product_leading_factor():
    psi = local_borcherds_product((HALF,), 0, 0, 2)
    assert psi.exponent_slice(0) == {(Fraction(0),): 1, (HALF,): -1}
    assert psi.trunc == 2
