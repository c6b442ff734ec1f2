"""
Чётные решётки в адаптированных координатах: форма Грама, двойственные классы, перебор векторов.
"""

from .posdef import (
    BUILTIN_GRAMS,
    LatticeError,
    PosDefLattice,
    block_diagonal,
    discriminant_cosets,
    e8_gram,
    gram_pair,
    reduce_mod_one,
)
from .enumeration import enumerate_by_norm
from .witt import DiscCoset, WittLattice, lattice_from_spec

__all__ = [
    'BUILTIN_GRAMS',
    'LatticeError',
    'PosDefLattice',
    'block_diagonal',
    'discriminant_cosets',
    'e8_gram',
    'gram_pair',
    'reduce_mod_one',
    'enumerate_by_norm',
    'DiscCoset',
    'WittLattice',
    'lattice_from_spec',
]
