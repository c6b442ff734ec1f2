from fractions import Fraction

import pytest

from borcherds import choose_chamber
from lattice import LatticeError
from modforms import VectorValuedForm
from weyl import (
    V00Frame,
    b_factor_split,
    compare_with_fj,
    positive_vectors,
    prefactor_unit,
    select_chamber_witness,
    weyl_constants,
    weyl_vector,
)

HALF = Fraction(1, 2)


def test_frame_norm(a1):
    frame = V00Frame(a1.L0)
    u = frame.from_abx(2, 3, (HALF,))
    assert frame.Q(u) == Fraction(1, 4) - 6
    y = frame.witness(7, (Fraction(-1, 3),))
    assert frame.pair(u, y) == 2 * 7 + 3 - a1.L0.pair((HALF,), (Fraction(-1, 3),))
    assert frame.monomial(u) == (2, 3, (-HALF,))


def test_j744_weyl_data(rank0, j744):
    chamber = choose_chamber(j744, rank0)
    assert weyl_constants(j744, rank0, chamber) == (1, 0)
    data = select_chamber_witness(j744, rank0, chamber)
    assert data.witness_y[0] == 7
    assert data.rho00 == (0, (), HALF)


def test_leech_type_weyl_vector(rank0, leech_type):
    chamber = choose_chamber(leech_type, rank0)
    assert weyl_vector(leech_type, rank0, chamber) == (1, (), 0)


def test_zero_form(rank0):
    zero = VectorValuedForm(0, rank0, lambda order: {})
    chamber = choose_chamber(zero, rank0)
    assert weyl_vector(zero, rank0, chamber) == (0, (), 0)
    with pytest.raises(ValueError):
        weyl_constants(zero, rank0, chamber)


def test_requires_unimodular_lattice(a1, phi01):
    with pytest.raises(LatticeError):
        compare_with_fj(phi01, a1, 1, 2)


def test_witness_height_must_exceed_bound(rank0, j744):
    chamber = choose_chamber(j744, rank0)
    with pytest.raises(ValueError):
        select_chamber_witness(j744, rank0, chamber, y2=6)


def test_positive_vectors_do_not_depend_on_witness(rank0, j744):
    chamber = choose_chamber(j744, rank0)
    base = select_chamber_witness(j744, rank0, chamber)
    doubled = select_chamber_witness(j744, rank0, chamber, y2=14)
    assert positive_vectors(j744, rank0, base, chamber, 2, 3) == positive_vectors(j744, rank0, doubled, chamber, 2, 3)


def test_positive_vectors_of_j744(rank0, j744):
    chamber = choose_chamber(j744, rank0)
    data = select_chamber_witness(j744, rank0, chamber)
    vectors = positive_vectors(j744, rank0, data, chamber, 1, 2)
    assert {(v.a, v.b) for v in vectors} == {(1, -1), (1, 1)}
    assert all(v.multiplicity == j744.coefficient(rank0.zero(), v.a * v.b) for v in vectors)


def test_prefactor_unit():
    assert prefactor_unit(Fraction(0)) == 1
    assert prefactor_unit(Fraction(1)) == -1
    assert prefactor_unit(Fraction(2)) == 1


@pytest.mark.parametrize("form_name, K, order", [("j744", 4, 3), ("leech_type", 4, 3)])
def test_borcherds_product_matches(request, rank0, form_name, K, order):
    form = request.getfixturevalue(form_name)
    comparison = compare_with_fj(form, rank0, K, order)
    assert comparison.check.holds, comparison.check.describe()
    assert comparison.split_check.holds, comparison.split_check.describe()
    assert comparison.unit == 1
    assert comparison.holds


def test_b_factor_split_of_leech_type(rank0, leech_type):
    chamber = choose_chamber(leech_type, rank0)
    data = select_chamber_witness(leech_type, rank0, chamber)
    parts = b_factor_split(leech_type, rank0, data, chamber, 3)
    assert parts.q2_exponent == 0
    assert parts.b4.coefficient(1) == 1
    assert parts.b2.coefficient(1) == -24
