from fractions import Fraction

import numpy as np
import pytest

from borcherds import (
    ConsistencyError,
    choose_chamber,
    compute_I0,
    cross_checked_I0,
    find_roots,
    vector_system_check,
)
from lattice import lattice_from_spec
from modforms import VectorValuedForm, e8_over_delta_form, eta_power_form

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def e8cubed():
    L = lattice_from_spec({'builtin': 'E8^3'})
    return L, eta_power_form(L, -24)


def test_rank0_has_no_roots(rank0, j744):
    chamber = choose_chamber(j744, rank0)
    assert chamber.roots == ()
    assert chamber.witness == ()


def test_a1_roots(a1, phi01):
    roots = find_roots(phi01, a1)
    assert sorted(r.vector for r in roots) == [(-HALF,), (HALF,)]
    assert all(r.norm == Fraction(1, 4) for r in roots)
    chamber = choose_chamber(phi01, a1)
    assert [r.vector for r in chamber.positive_roots] == [(HALF,)]
    flipped = choose_chamber(phi01, a1, witness=(-1,))
    assert [r.vector for r in flipped.positive_roots] == [(-HALF,)]


def test_witness_on_wall(a1, phi01):
    with pytest.raises(ValueError):
        choose_chamber(phi01, a1, witness=(0,))


def test_root_negation(a1, phi01):
    root = find_roots(phi01, a1)[0]
    assert root.negate(a1).negate(a1) == root


@pytest.mark.parametrize("route", ['sigma_sum', 'e2_ct'])
def test_i0_examples(route, rank0, j744, leech_type, a1, phi01):
    assert compute_I0(j744, rank0, route) == -1
    assert compute_I0(leech_type, rank0, route) == 0
    assert compute_I0(phi01, a1, route) == HALF


def test_i0_e8_over_delta():
    e8 = lattice_from_spec({'builtin': 'E8'})
    assert cross_checked_I0(e8_over_delta_form(e8), e8) == 30


def test_i0_e8cubed(e8cubed):
    L, form = e8cubed
    assert cross_checked_I0(form, L) == 30


def test_e8cubed_has_720_roots(e8cubed):
    L, form = e8cubed
    chamber = choose_chamber(form, L)
    assert len(chamber.roots) == 720
    assert len(chamber.positive_roots) == 360


def test_unknown_route(rank0, j744):
    with pytest.raises(ValueError):
        compute_I0(j744, rank0, 'theta')


def test_i0_must_be_in_twentyfourth_part(rank0):
    zero = rank0.zero()
    form = VectorValuedForm(0, rank0, lambda order: {zero: {Fraction(0): HALF}})
    assert compute_I0(form, rank0) == Fraction(1, 48)
    with pytest.raises(ConsistencyError):
        cross_checked_I0(form, rank0)


def test_vector_system_a1(a1, phi01):
    report = vector_system_check(phi01, a1)
    assert report.equal
    assert report.rhs.tolist() == [[2]]


def test_vector_system_e8cubed(e8cubed):
    L, form = e8cubed
    report = vector_system_check(form, L, I0=Fraction(30))
    assert report.equal
    assert np.array_equal(report.lhs, np.array(L.L0.rows, dtype=object) * 60)


def test_vector_system_detects_wrong_exponent(a1, phi01):
    report = vector_system_check(phi01, a1, I0=Fraction(1))
    assert not report.equal
    assert report.difference.tolist() == [[2]]


def test_vector_system_rank0(rank0, j744):
    assert vector_system_check(j744, rank0).equal
