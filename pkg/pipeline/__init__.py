"""
Набор проверок тождеств в виде цепочки ответственности.
"""

from .base_handler import BaseHandler, CheckContext, CheckVerdict
from .handlers import (
    CovarianceHandler,
    ExpansionRoutesHandler,
    LocalProductHandler,
    RelationsHandler,
    ThetaFormsHandler,
    ValidateFormHandler,
    VectorSystemHandler,
    WeylComparisonHandler,
    ZeroOrbitHandler,
)
from .pipeline import CheckPipeline, first_failure, verdict_table

__all__ = [
    'BaseHandler',
    'CheckContext',
    'CheckVerdict',
    'CovarianceHandler',
    'ExpansionRoutesHandler',
    'LocalProductHandler',
    'RelationsHandler',
    'ThetaFormsHandler',
    'ValidateFormHandler',
    'VectorSystemHandler',
    'WeylComparisonHandler',
    'ZeroOrbitHandler',
    'CheckPipeline',
    'first_failure',
    'verdict_table',
]
