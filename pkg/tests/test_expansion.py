from fractions import Fraction

import pytest

from borcherds import (
    MeromorphicFactorError,
    check_fj_polynomials,
    choose_chamber,
    explicit_polynomial,
    fj_expansion,
    grade1_sign,
    product_expansion,
    psi0,
)
from exactmath import I, GradedFJSeries, JacobiSeries, first_difference, series_difference
from modforms import VectorValuedForm, classical_series, eta_power, jacobi_theta1

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def j744_result(rank0, j744):
    return fj_expansion(j744, rank0, 4, 6)


@pytest.fixture(scope="module")
def phi01_result(a1, phi01):
    return fj_expansion(phi01, a1, 4, 6, witness=(1,))


@pytest.fixture
def meromorphic(a1, phi01):
    """−φ₀,₁: кратность корня −1."""
    def generate(order):
        return {c: {m: -v for m, v in phi01.coefficients(c, order).items()} for c in a1.cosets}

    return VectorValuedForm(Fraction(-1, 2), a1, generate, name='-phi01')


def _gn_psi0(order):
    theta = jacobi_theta1(order).map_keys([(-HALF,)], 1)
    return (eta_power(9, order).with_rank(1) * theta).truncate(order)


def test_psi0_of_j744(rank0, j744):
    result = psi0(j744, rank0, choose_chamber(j744, rank0), 3)
    assert result.series == JacobiSeries.one().truncate(3)
    assert result.eta_exponent == 0
    assert result.phase == 1


def test_psi0_of_phi01(a1, phi01):
    result = psi0(phi01, a1, choose_chamber(phi01, a1, (1,)), 6)
    assert result.eta_exponent == 9
    assert result.phase == I
    assert result.series.trunc == 6
    assert series_difference(result.series, _gn_psi0(6)) is None


def test_psi0_flips_sign_with_chamber(a1, phi01):
    up = psi0(phi01, a1, choose_chamber(phi01, a1, (1,)), 3)
    down = psi0(phi01, a1, choose_chamber(phi01, a1, (-1,)), 3)
    assert down.series == -up.series


def test_psi0_of_leech_type(rank0, leech_type):
    result = psi0(leech_type, rank0, choose_chamber(leech_type, rank0), 4)
    assert result.series == eta_power(24, 4)
    assert result.eta_exponent == 24


def test_psi0_rejects_negative_root_multiplicity(a1, meromorphic):
    with pytest.raises(MeromorphicFactorError):
        psi0(meromorphic, a1, choose_chamber(meromorphic, a1, (1,)), 2)
    with pytest.raises(MeromorphicFactorError):
        fj_expansion(meromorphic, a1, 1, 2)


def test_j744_expansion(j744_result):
    order = 6
    j = classical_series('j744', order)
    grades = [JacobiSeries.one().truncate(order), (-j).truncate(order)]
    grades += [JacobiSeries.monomial(0, (), j.coefficient(k - 1), trunc=order) for k in range(2, 5)]
    assert j744_result.I0 == -1
    assert j744_result.psi[3].coefficient(0) == 21493760
    assert j744_result.psi[4].coefficient(0) == 864299970
    assert first_difference(j744_result.psi, GradedFJSeries(-1, grades)) is None
    assert all(g.trunc == order for g in j744_result.psi.grades)


def test_j_difference_to_grade_six(rank0, j744):
    order = 8
    result = fj_expansion(j744, rank0, 6, order)
    j = classical_series('j744', 6)
    grades = [JacobiSeries.one().truncate(order), (-classical_series('j744', order)).truncate(order)]
    grades += [JacobiSeries.monomial(0, (), j.coefficient(k - 1, ()), trunc=order) for k in range(2, 7)]
    assert first_difference(result.psi, GradedFJSeries(-1, grades)) is None


def test_j744_product_route(rank0, j744, j744_result):
    direct = product_expansion(j744, rank0, 4, 6)
    assert first_difference(direct.psi, j744_result.psi) is None
    assert direct.thetas == {}


def test_phi01_routes_agree(a1, phi01, phi01_result):
    direct = product_expansion(phi01, a1, 4, 6, witness=(1,))
    assert phi01_result.I0 == HALF
    assert phi01_result.psi.offset == HALF
    assert first_difference(direct.psi, phi01_result.psi) is None


def test_leech_type_closed_form(rank0, leech_type):
    order = 3
    result = fj_expansion(leech_type, rank0, 2, order)
    delta = classical_series('delta', order + 1)
    j = classical_series('j744', order) + JacobiSeries.monomial(0, (), 744)
    dj = delta * j
    expected = GradedFJSeries(0, [
        delta.truncate(order),
        (delta.scalar_mul(720) - dj).truncate(order),
        (delta.scalar_mul(179280) + dj.scalar_mul(24)).truncate(order),
    ])
    assert first_difference(result.psi, expected) is None
    direct = product_expansion(leech_type, rank0, 2, order)
    assert first_difference(direct.psi, result.psi) is None


def test_negative_grade_count(rank0, j744):
    with pytest.raises(ValueError):
        fj_expansion(j744, rank0, -1, 2)


def test_polynomial_relations(j744_result, phi01_result):
    for result in (j744_result, phi01_result):
        checks = check_fj_polynomials(result)
        assert checks
        names = {c.name for c in checks}
        assert {"Ψ_3 явная формула", "Ψ_4 многочлен Белла"} <= names
        assert all(c.holds for c in checks), [c.describe() for c in checks if not c.holds]


def test_grade1_sign(j744_result, phi01_result):
    assert grade1_sign(j744_result) == -1
    assert grade1_sign(phi01_result) == -1


def test_explicit_polynomial_range(j744_result):
    with pytest.raises(ValueError):
        explicit_polynomial(j744_result.thetas, 4)


def test_relations_need_thetas(rank0, j744):
    with pytest.raises(ValueError):
        check_fj_polynomials(product_expansion(j744, rank0, 1, 2))
