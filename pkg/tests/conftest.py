"""
Общие решётки и формы для тестов.
"""

import pytest
from hypothesis import settings

from lattice import PosDefLattice, WittLattice, lattice_from_spec
from modforms import j744_form, phi01_components

settings.register_profile("exact", max_examples=40, deadline=None)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def rank0():
    return lattice_from_spec({'builtin': 'rank0'})


@pytest.fixture(scope="session")
def j744(rank0):
    return j744_form(rank0)


@pytest.fixture(scope="session")
def leech_type(rank0):
    """j − 720: Ψ = Δ(τ₁)Δ(τ₂)(j(τ₂) − j(τ₁))."""
    return j744_form(rank0, shift=24)


@pytest.fixture(scope="session")
def a1():
    return WittLattice(PosDefLattice([[2]]))


@pytest.fixture(scope="session")
def phi01(a1):
    return phi01_components(a1)
