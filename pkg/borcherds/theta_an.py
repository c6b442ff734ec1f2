"""
Одночлены множителя (i) и ряды Θ_{a,n}.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from exactmath import CycRational, JacobiSeries
from lattice import WittLattice, enumerate_by_norm
from lattice.posdef import Vector
from modforms import VectorValuedForm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorMonomial:
    """
    Член (1 − q₂^a q₁^exponent X^{−x₀} e(−λ₂₂))^multiplicity множителя (i).
    """

    a: int
    exponent: Fraction
    x0: Vector
    lam22: Fraction
    multiplicity: Fraction

    def character(self, n: int = 1) -> CycRational:
        return CycRational.root_of_unity(-n * self.lam22)


def factor_monomials(F: VectorValuedForm, L: WittLattice, a: int, bound: Fraction) -> List[FactorMonomial]:
    """
    Все одночлены множителя (i) при q₂^a с показателем q₁ меньше bound.

    Перебираются λ с λ₁₂ = 0, λ₁₁ ≡ a (mod N), x₀ ∈ λ₀ + L₀ и m,
    для которых a | (m + Q(x₀) + aλ₂₁), т. е. b = (m + Q(x₀))/a ∈ −λ₂₁ + ℤ.
    """
    if a < 1:
        raise ValueError(f"Степень q₂ должна быть положительной: {a}")
    bound = Fraction(bound)
    m_max = F.m_max
    out = []
    for coset in L.cosets_with(lam12=0, lam11=a):
        lam21, lam22 = coset.lam2
        for x0 in enumerate_by_norm(L.L0, coset.lam0, a * bound + m_max):
            q = L.L0.Q(x0)
            for m, c in F.coefficients(coset, a * bound - q).items():
                b = (m + q) / a
                if (b + lam21).denominator != 1:
                    continue
                out.append(FactorMonomial(a, b, x0, lam22, c))
    out.sort(key=lambda f: (f.exponent, f.x0, f.lam22))
    logger.debug(f"Множитель (i), a = {a}: {len(out)} одночленов с показателем < {bound}")
    return out


def theta_an(
    F: VectorValuedForm,
    L: WittLattice,
    a: int,
    n: int,
    order: Fraction,
    monomials: Optional[Sequence[FactorMonomial]] = None,
) -> JacobiSeries:
    """
    Θ_{a,n} = Σ c · q₁^{n·b} X^{−n·x₀} e(−n·λ₂₂) до порядка order.

    Args:
        monomials: Заранее собранные одночлены для того же a с границей не меньше order/n.
    """
    if n < 1:
        raise ValueError(f"n должно быть положительным: {n}")
    order = Fraction(order)
    if monomials is None:
        monomials = factor_monomials(F, L, a, order / n)
    items = [
        (n * f.exponent, tuple(-n * x for x in f.x0), f.character(n) * f.multiplicity)
        for f in monomials
        if n * f.exponent < order
    ]
    return JacobiSeries.build(L.L0.rank, items, trunc=order)
