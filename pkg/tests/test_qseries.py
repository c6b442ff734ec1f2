from fractions import Fraction

import pytest

from exactmath import JacobiSeries
from lattice import PosDefLattice
from modforms import classical_series, eta_power, euler_function, sigma1, theta_coset


def coeffs(s, upto):
    return [s.coefficient(n).to_fraction() for n in range(upto)]


def test_pentagonal_numbers():
    phi = euler_function(13)
    assert coeffs(phi, 13) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_eta_inverse_24():
    s = eta_power(-24, 3)
    assert s.trunc == 3
    assert s.coefficient(-1) == 1
    assert coeffs(s, 3) == [24, 324, 3200]


def test_eta_fractional_exponent():
    s = eta_power(1, 2)
    assert s.coefficient(Fraction(1, 24)) == 1
    assert s.coefficient(Fraction(25, 24)) == -1
    assert s.trunc == 2


def test_delta_is_eta24():
    delta = classical_series('delta', 6)
    assert coeffs(delta, 6) == [0, 1, -24, 252, -1472, 4830]


def test_eisenstein_series():
    assert classical_series('E2', 3).coefficient(1) == -24
    assert classical_series('E4', 3).coefficient(2) == 240 * 9
    assert classical_series('E6', 2).coefficient(1) == -504


def test_discriminant_identity():
    order = 6
    e4 = classical_series('E4', order)
    e6 = classical_series('E6', order)
    delta = classical_series('delta', order)
    assert (e4 ** 3 - e6 * e6) == delta.scalar_mul(1728)


def test_j744():
    j = classical_series('j744', 3)
    assert j.coefficient(-1) == 1
    assert j.coefficient(0) == 0
    assert j.coefficient(1) == 196884
    assert j.coefficient(2) == 21493760


def test_unknown_series():
    with pytest.raises(ValueError):
        classical_series('E8', 2)


@pytest.mark.parametrize("r, expected", [
    (6, 12),
    (1, 1),
    (0, Fraction(-1, 24)),
    (Fraction(1, 2), 0),
    (-3, 0),
])
def test_sigma1(r, expected):
    assert sigma1(r) == expected


def test_theta_of_a1_cosets():
    L0 = PosDefLattice([[2]])
    even = theta_coset(L0, (Fraction(0),), 5)
    odd = theta_coset(L0, (Fraction(1, 2),), 5)
    assert even == JacobiSeries.build(0, [(0, (), 1), (1, (), 2), (4, (), 2)], trunc=5)
    assert odd == JacobiSeries.build(0, [(Fraction(1, 4), (), 2), (Fraction(9, 4), (), 2)], trunc=5)


def test_theta_of_rank0():
    assert theta_coset(PosDefLattice([]), (), 3) == JacobiSeries.one().truncate(3)
