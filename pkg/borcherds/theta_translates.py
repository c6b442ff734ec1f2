"""
Сдвинутые тета-функции Θ₁[η] и локальное произведение Борчердса Ψ_x.

Θ₁[η](z) = e(η₁z + ½η₁η₂) · q^{½η₁²} · ϑ₁(z + η₁τ + η₂).
"""

import logging
from fractions import Fraction
from typing import Sequence

from exactmath import CycRational, I, JacobiSeries
from modforms import eta_power, jacobi_theta1

from .identity import IdentityCheck, compare

logger = logging.getLogger(__name__)


def theta_translate(eta1: Fraction, eta2: Fraction, order: Fraction) -> JacobiSeries:
    """Θ₁[η](z) как ряд по q и e(s·z) до порядка order."""
    eta1, eta2, order = Fraction(eta1), Fraction(eta2), Fraction(order)
    lead = eta1 * eta1 / 2
    core = jacobi_theta1(order - lead, shift=(eta1, eta2))
    return core.shift(lead, (eta1,), CycRational.root_of_unity(eta1 * eta2 / 2)).truncate(order)


def translation_multiplier(eta1: Fraction, eta2: Fraction, a: int, b: int) -> CycRational:
    """
    Множитель закона Θ₁[η + ℓ] = α(ℓ) e(½E(η, ℓ)) Θ₁[η] для ℓ = aτ + b.

    α(ℓ) = e(½ab)(−1)^{a+b}, E(η, ℓ) = η₁b − aη₂.
    """
    sign = -1 if (a + b) % 2 else 1
    phase = Fraction(a * b, 2) + (Fraction(eta1) * b - a * Fraction(eta2)) / 2
    return CycRational.root_of_unity(phase) * sign


def check_translate_law(eta1: Fraction, eta2: Fraction, a: int, b: int, order: Fraction) -> IdentityCheck:
    lhs = theta_translate(Fraction(eta1) + a, Fraction(eta2) + b, order)
    rhs = theta_translate(eta1, eta2, order).scalar_mul(translation_multiplier(eta1, eta2, a, b))
    return compare(f"Θ₁[η+ℓ], η = ({eta1}, {eta2}), ℓ = ({a}, {b})", lhs, rhs, order)


def _binomial(rank: int, exponent: Fraction, key: Sequence[Fraction], phase: Fraction) -> JacobiSeries:
    """1 − e(phase) q^exponent X^key."""
    return JacobiSeries.build(rank, [(0, (0,) * rank, 1), (exponent, key, -CycRational.root_of_unity(phase))])


def local_borcherds_product(x0: Sequence[Fraction], lam21: Fraction, lam22: Fraction, order: Fraction) -> JacobiSeries:
    """
    Ψ_x = (1 − u) Π_{a≥1} (1 − qᵃu)(1 − qᵃu⁻¹), где u = e((x, w)) = X^{x₀} q^{λ₂₁} e(λ₂₂).

    Args:
        x0: Компонента x₀ в координатах L₀.
        lam21, lam22: Компоненты λ₂ класса x.
        order: Порядок усечения по q.
    """
    x0 = tuple(Fraction(x) for x in x0)
    lam21, lam22, order = Fraction(lam21), Fraction(lam22), Fraction(order)
    rank = len(x0)
    inverse = tuple(-x for x in x0)
    result = _binomial(rank, lam21, x0, lam22).truncate(order)
    a = 1
    while a - lam21 < order or a + lam21 < order:
        if a + lam21 < order:
            result = (result * _binomial(rank, a + lam21, x0, lam22)).truncate(order)
        if a - lam21 < order:
            result = (result * _binomial(rank, a - lam21, inverse, -lam22)).truncate(order)
        a += 1
    return result


def check_local_product(x0: Sequence[Fraction], lam21: Fraction, lam22: Fraction, order: Fraction) -> IdentityCheck:
    """
    ϑ₁(−(x, w))/η = −i q^{1/12} e(−½(x, w)) Ψ_x.
    """
    x0 = tuple(Fraction(x) for x in x0)
    lam21, lam22, order = Fraction(lam21), Fraction(lam22), Fraction(order)
    rank = len(x0)
    wide = order + 1
    theta = jacobi_theta1(wide, shift=(-lam21, -lam22)).map_keys([tuple(-x for x in x0)], rank)
    lhs = theta * eta_power(-1, wide).with_rank(rank)
    psi = local_borcherds_product(x0, lam21, lam22, wide)
    rhs = psi.shift(Fraction(1, 12) - lam21 / 2, tuple(-x / 2 for x in x0), -I * CycRational.root_of_unity(-lam22 / 2))
    return compare(f"локальное произведение, x₀ = {x0}, λ₂ = ({lam21}, {lam22})", lhs, rhs, order)
