"""
Решётки с U(N), N > 1: условие делимости в Θ_{a,n}, множители кручения Ψ₀, корни с λ₂ ≠ 0.
"""

from fractions import Fraction

import pytest

from borcherds import ConsistencyError, choose_chamber, factor_monomials, psi0, theta_an
from exactmath import I, CycRational
from lattice import PosDefLattice, WittLattice
from modforms import VectorValuedForm

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def _form(L, table, name):
    def generate(order):
        return {c: {Fraction(m): Fraction(v) for m, v in row.items() if Fraction(m) < order} for c, row in table.items()}

    return VectorValuedForm(0, L, generate, name=name)


@pytest.fixture(scope="module")
def level3():
    return WittLattice(PosDefLattice([]), 3)


@pytest.fixture(scope="module")
def level2():
    return WittLattice(PosDefLattice([]), 2)


@pytest.fixture(scope="module")
def shifted_coset_form(level3):
    """c(−1/3) = 1, c(2/3) = 5 на классе λ₁ = (1,0), λ₂ = (1/3,0) и на противоположном."""
    coset = level3.canonical((), (1, 0), (THIRD, 0))
    row = {Fraction(-1, 3): 1, Fraction(2, 3): 5}
    return _form(level3, {coset: row, level3.negate(coset): row}, 'level3')


def test_shifted_coset_norm(level3):
    coset = level3.canonical((), (1, 0), (THIRD, 0))
    assert level3.Q(coset) == THIRD
    assert level3.Q(level3.negate(coset)) == THIRD


def test_grade_one_keeps_every_term(level3, shifted_coset_form):
    monomials = factor_monomials(shifted_coset_form, level3, 1, 3)
    assert [(f.exponent, f.multiplicity) for f in monomials] == [(Fraction(-1, 3), 1), (Fraction(2, 3), 5)]
    theta = theta_an(shifted_coset_form, level3, 1, 1, 3)
    assert theta.coefficient(Fraction(-1, 3)) == 1
    assert theta.coefficient(Fraction(2, 3)) == 5
    assert len(theta) == 2


def test_grade_two_divisibility(level3, shifted_coset_form):
    # λ₁₁ = 2, λ₂₁ = 2/3: 2 | (m + 4/3) только при m = 2/3
    monomials = factor_monomials(shifted_coset_form, level3, 2, 3)
    assert [(f.exponent, f.multiplicity) for f in monomials] == [(THIRD, 5)]
    for f in monomials:
        assert (f.exponent + Fraction(2, 3)).denominator == 1


def test_two_torsion_factor(level2):
    torsion = level2.canonical((), (0, 0), (0, HALF))
    F = _form(level2, {level2.zero(): {-1: 1}, torsion: {0: 2}}, 'level2')
    result = psi0(F, level2, choose_chamber(F, level2), 3)
    assert [(f.lam2, f.root, f.exponent) for f in result.factors] == [((0, HALF), None, 1)]
    assert result.eta_exponent == -1
    assert result.phase == 1
    # Θ₁[0,−½](0)/η = −ϑ₂(0)/η = −2q^{1/12}(1 + 2q + …)
    assert result.series.coefficient(Fraction(1, 12)) == -2
    assert result.series.coefficient(Fraction(13, 12)) == -4


def test_odd_two_torsion_exponent_rejected(level2):
    torsion = level2.canonical((), (0, 0), (HALF, HALF))
    F = _form(level2, {torsion: {0: 1}}, 'odd')
    with pytest.raises(ConsistencyError):
        psi0(F, level2, choose_chamber(F, level2), 2)


def test_torsion_pair_factor(level3):
    torsion = level3.canonical((), (0, 0), (0, THIRD))
    F = _form(level3, {torsion: {0: 1}, level3.negate(torsion): {0: 1}}, 'pair')
    result = psi0(F, level3, choose_chamber(F, level3), 2)
    assert [(f.lam2, f.exponent, f.phase) for f in result.factors] == [((0, THIRD), 1, 1)]
    assert result.phase == I
    sqrt3 = CycRational.root_of_unity(Fraction(1, 12)) + CycRational.root_of_unity(Fraction(-1, 12))
    assert result.series.coefficient(Fraction(1, 12)) == -sqrt3


def test_root_with_torsion_coset():
    L = WittLattice(PosDefLattice([[2]]), 2)
    coset = L.canonical((HALF,), (0, 0), (0, HALF))
    F = _form(L, {coset: {Fraction(-1, 4): 1}}, 'root')
    chamber = choose_chamber(F, L, (1,))
    assert [r.vector for r in chamber.positive_roots] == [(HALF,)]
    result = psi0(F, L, chamber, 2)
    assert [(f.lam2, f.root) for f in result.factors] == [((0, HALF), (HALF,))]
    assert result.phase == I
    # Θ₁[0,−½] чётна по z: −ϑ₂
    assert result.series.exponent_slice(Fraction(1, 12)) == {
        (Fraction(-1, 4),): -1,
        (Fraction(1, 4),): -1,
    }
