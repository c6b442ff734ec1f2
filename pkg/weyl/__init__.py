"""
Сравнение с классическим произведением Борчердса: L₀₀, камера Вейля, вектор Вейля ρ₀₀.
"""

from .frame import V00Frame
from .weyl_vector import WeylData, root_sum, select_chamber_witness, weyl_constants, weyl_vector
from .comparison import (
    BFactors,
    PositiveVector,
    WeylComparison,
    b_factor_split,
    borcherds_side_product,
    compare_with_fj,
    find_unit,
    positive_vectors,
    prefactor_unit,
)

__all__ = [
    'V00Frame',
    'WeylData',
    'root_sum',
    'select_chamber_witness',
    'weyl_constants',
    'weyl_vector',
    'BFactors',
    'PositiveVector',
    'WeylComparison',
    'b_factor_split',
    'borcherds_side_product',
    'compare_with_fj',
    'find_unit',
    'positive_vectors',
    'prefactor_unit',
]
