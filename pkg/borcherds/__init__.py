"""
Основные формулы: I₀, Θ_{a,n}, Ψ₀, разложение Фурье–Якоби двумя путями,
тождество векторной системы, сдвинутые тета-функции и локальные произведения.
"""

from .errors import ConsistencyError, MeromorphicFactorError
from .identity import IdentityCheck, compare
from .chamber import Chamber0, Root, choose_chamber, find_roots, isotropic_cosets
from .zero_orbit import VectorSystemReport, compute_I0, cross_checked_I0, vector_system_check
from .theta_an import FactorMonomial, factor_monomials, theta_an
from .theta_translates import (
    check_local_product,
    check_translate_law,
    local_borcherds_product,
    theta_translate,
    translation_multiplier,
)
from .psi0 import Psi0Result, ThetaFactor, psi0
from .expansion import FJResult, apply_factor, collect_thetas, fj_expansion, log_series, product_expansion
from .relations import (
    bell_polynomial,
    check_fj_polynomials,
    check_translation_covariance,
    explicit_polynomial,
    grade1_sign,
)

__all__ = [
    'ConsistencyError',
    'MeromorphicFactorError',
    'IdentityCheck',
    'compare',
    'Chamber0',
    'Root',
    'choose_chamber',
    'find_roots',
    'isotropic_cosets',
    'VectorSystemReport',
    'compute_I0',
    'cross_checked_I0',
    'vector_system_check',
    'FactorMonomial',
    'factor_monomials',
    'theta_an',
    'check_local_product',
    'check_translate_law',
    'local_borcherds_product',
    'theta_translate',
    'translation_multiplier',
    'Psi0Result',
    'ThetaFactor',
    'psi0',
    'FJResult',
    'apply_factor',
    'collect_thetas',
    'fj_expansion',
    'log_series',
    'product_expansion',
    'bell_polynomial',
    'check_fj_polynomials',
    'check_translation_covariance',
    'explicit_polynomial',
    'grade1_sign',
]
