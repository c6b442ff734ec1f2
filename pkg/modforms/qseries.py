"""
Классические q-ряды: степени η, ряды Эйзенштейна, Δ, j − 744, тета-ряды классов.
"""

import logging
from fractions import Fraction
from typing import Dict, Sequence, Union

from sympy import divisor_sigma

from exactmath import CycRational, JacobiSeries
from lattice import PosDefLattice, enumerate_by_norm

logger = logging.getLogger(__name__)

# Ряд по одной переменной q — частный случай JacobiSeries ранга 0.
QSeries = JacobiSeries

Order = Union[int, Fraction]


def _qseries(coeffs: Dict[Fraction, Fraction], order: Order) -> QSeries:
    return JacobiSeries.build(0, [(e, (), c) for e, c in coeffs.items() if c], trunc=Fraction(order))


def euler_function(order: Order) -> QSeries:
    """Π(1 − qⁿ) по пентагональной теореме Эйлера."""
    order = Fraction(order)
    coeffs: Dict[Fraction, Fraction] = {}
    j = 0
    while True:
        hit = False
        for s in ((j,) if j == 0 else (j, -j)):
            e = Fraction(s * (3 * s - 1), 2)
            if e < order:
                coeffs[e] = Fraction((-1) ** (s % 2))
                hit = True
        if not hit and j > 0:
            break
        j += 1
    return _qseries(coeffs, order)


def eta_power(k: int, order: Order) -> QSeries:
    """
    η(τ)^k = q^{k/24} Π(1 − qⁿ)^k до порядка order.

    Отрицательные степени получаются обращением ряда Эйлера.
    """
    order = Fraction(order)
    inner = order - Fraction(k, 24)
    if inner <= 0:
        return JacobiSeries.zero(0, trunc=order)
    base = euler_function(inner)
    if k < 0:
        base = base.invert(inner)
    result = base ** abs(k) if k else JacobiSeries.one(0)
    return result.truncate(inner).shift(Fraction(k, 24)).truncate(order)


def sigma1(r: Union[int, Fraction]) -> Fraction:
    """σ₁ с соглашениями σ₁(0) = −1/24 и σ₁(r) = 0 при r ∉ ℤ≥0."""
    r = Fraction(r)
    if r == 0:
        return Fraction(-1, 24)
    if r < 0 or r.denominator != 1:
        return Fraction(0)
    return Fraction(int(divisor_sigma(int(r), 1)))


def _eisenstein(k: int, factor: int, order: Order) -> QSeries:
    coeffs = {Fraction(0): Fraction(1)}
    n = 1
    while n < order:
        coeffs[Fraction(n)] = Fraction(factor * int(divisor_sigma(n, k - 1)))
        n += 1
    return _qseries(coeffs, order)


def classical_series(name: str, order: Order) -> QSeries:
    """
    Нормированные ряды E2, E4, E6, delta и j744 = E₄³/Δ − 744.

    Args:
        name: Имя ряда.
        order: Порядок усечения.
    """
    order = Fraction(order)
    if name == 'E2':
        return _eisenstein(2, -24, order)
    if name == 'E4':
        return _eisenstein(4, 240, order)
    if name == 'E6':
        return _eisenstein(6, -504, order)
    if name == 'delta':
        return eta_power(24, order)
    if name == 'j744':
        delta = eta_power(24, order + 2)
        e4 = _eisenstein(4, 240, order + 1)
        j = e4 ** 3 * delta.invert(order)
        return (j - JacobiSeries.monomial(0, (), 744)).truncate(order)
    raise ValueError(f"Неизвестный классический ряд: {name}")


def theta_coset(L0: PosDefLattice, lam0: Sequence[Fraction], order: Order) -> QSeries:
    """θ(τ, φ_λ₀) = Σ_{x₀ ∈ λ₀+L₀} q^{Q(x₀)} до порядка order."""
    order = Fraction(order)
    coeffs: Dict[Fraction, Fraction] = {}
    for x in enumerate_by_norm(L0, lam0, order):
        q = L0.Q(x)
        if q < order:
            coeffs[q] = coeffs.get(q, Fraction(0)) + 1
    return _qseries(coeffs, order)
