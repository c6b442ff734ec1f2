from fractions import Fraction

from exactmath import I
from modforms import jacobi_theta1, jacobi_theta1_product, phi01_coefficients

HALF = Fraction(1, 2)


def test_theta1_sum_equals_product():
    assert jacobi_theta1(10) == jacobi_theta1_product(10)


def test_theta1_leading_term():
    theta = jacobi_theta1(1)
    assert theta.min_exp == Fraction(1, 8)
    assert theta.exponent_slice(Fraction(1, 8)) == {(HALF,): -I, (-HALF,): I}


def test_theta1_is_odd():
    theta = jacobi_theta1(6)
    assert theta.negate_keys() == -theta


def test_theta1_shift_by_lattice_period():
    # ϑ₁(z + 1) = −ϑ₁(z)
    assert jacobi_theta1(5, shift=(0, 1)) == -jacobi_theta1(5)


def test_phi01_components():
    table = phi01_coefficients(3)
    assert table[0][Fraction(0)] == 10
    assert table[0][Fraction(1)] == 108
    assert table[0][Fraction(2)] == 808
    assert table[1][Fraction(-1, 4)] == 1
    assert table[1][Fraction(3, 4)] == -64
    assert table[1][Fraction(7, 4)] == -513
    assert all(m < 3 for row in table.values() for m in row)


def test_phi01_principal_part():
    table = phi01_coefficients(1)
    negative = {(mu, m): c for mu, row in table.items() for m, c in row.items() if m < 0}
    assert negative == {(1, Fraction(-1, 4)): 1}
