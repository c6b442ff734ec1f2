"""
Генераторы модулярных рядов и контейнер входной векторнозначной формы.
"""

from .qseries import QSeries, classical_series, eta_power, euler_function, sigma1, theta_coset
from .jacobi import DecompositionError, jacobi_theta1, jacobi_theta1_product, phi01_coefficients
from .vvform import (
    CoefficientRangeError,
    FormDiagnostics,
    FormValidationError,
    VectorValuedForm,
    require_valid,
    validate_form,
)
from .builtins import (
    e8_over_delta_form,
    eta_power_form,
    form_from_file,
    form_from_spec,
    j744_form,
    phi01_components,
)

__all__ = [
    'QSeries',
    'classical_series',
    'eta_power',
    'euler_function',
    'sigma1',
    'theta_coset',
    'DecompositionError',
    'jacobi_theta1',
    'jacobi_theta1_product',
    'phi01_coefficients',
    'CoefficientRangeError',
    'FormDiagnostics',
    'FormValidationError',
    'VectorValuedForm',
    'require_valid',
    'validate_form',
    'e8_over_delta_form',
    'eta_power_form',
    'form_from_file',
    'form_from_spec',
    'j744_form',
    'phi01_components',
]
