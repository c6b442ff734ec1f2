"""
Точная арифметика: круговые числа и усечённые ряды Фурье–Якоби.
"""

from .cyclotomic import CycRational, ONE, ZERO, I
from .series import (
    INFINITY,
    CharKey,
    JacobiSeries,
    SeriesError,
    key_vector,
    pair,
    series_arith,
    series_invert,
    substitute_w0_translation,
)
from .graded import (
    Difference,
    GradedFJSeries,
    first_difference,
    series_difference,
    series_exp_graded,
)
from .serialization import (
    cyc_from_json,
    cyc_to_json,
    dumps,
    format_rational,
    graded_from_json,
    graded_to_json,
    parse_rational,
    series_from_json,
    series_to_json,
)

__all__ = [
    'CycRational',
    'ONE',
    'ZERO',
    'I',
    'INFINITY',
    'CharKey',
    'JacobiSeries',
    'SeriesError',
    'key_vector',
    'pair',
    'series_arith',
    'series_invert',
    'substitute_w0_translation',
    'Difference',
    'GradedFJSeries',
    'first_difference',
    'series_difference',
    'series_exp_graded',
    'cyc_from_json',
    'cyc_to_json',
    'dumps',
    'format_rational',
    'graded_from_json',
    'graded_to_json',
    'parse_rational',
    'series_from_json',
    'series_to_json',
]
