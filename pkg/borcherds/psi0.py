"""
Нулевой коэффициент Фурье–Якоби Ψ₀ как произведение тета-функций.

Ψ₀ = η^{c₀(0)} · Π_{λ₂≠0} (Θ₁[−Λ₂](0)/η)^{c_λ(0)/2} · Π_{α>0} Π_λ (Θ₁[−Λ₂](−(α, w₀))/η)^{c_λ(−Q(α))}.

Фаза i^{Σc} не входит в ряд и возвращается отдельно.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from exactmath import CycRational, I, JacobiSeries
from lattice import WittLattice
from lattice.posdef import Vector
from modforms import VectorValuedForm, eta_power

from .chamber import Chamber0
from .errors import ConsistencyError, MeromorphicFactorError
from .theta_translates import theta_translate

logger = logging.getLogger(__name__)

MAX_WIDENINGS = 8


@dataclass(frozen=True)
class ThetaFactor:
    """
    Множитель Θ₁[−Λ₂](−(α, w₀))^exponent; для кручения α = None и z = 0.

    phase — вносимый множителем показатель i.
    """

    lam2: Tuple[Fraction, Fraction]
    root: Optional[Vector]
    exponent: int
    phase: int = 0

    def series(self, rank: int, order: Fraction) -> JacobiSeries:
        base = theta_translate(-self.lam2[0], -self.lam2[1], order)
        if self.root is None:
            base = base.map_keys([()], 0).with_rank(rank)
        else:
            base = base.map_keys([tuple(-x for x in self.root)], rank)
        if self.exponent >= 0:
            return base ** self.exponent
        return base.invert(order) ** (-self.exponent)


@dataclass
class Psi0Result:
    series: JacobiSeries
    eta_exponent: int
    phase_exponent: int
    factors: List[ThetaFactor] = field(default_factory=list)

    @property
    def phase(self) -> CycRational:
        return I ** (self.phase_exponent % 4)


def _as_int(value: Fraction, where: str) -> int:
    if Fraction(value).denominator != 1:
        raise ConsistencyError(f"Нецелая кратность {value} ({where})")
    return int(value)


def _torsion_factors(F: VectorValuedForm, L: WittLattice) -> List[ThetaFactor]:
    """Пары ±λ₂ при λ₀ = 0, λ₁ = 0; для 2-кручения показатель c/2 должен быть целым."""
    factors = []
    seen = set()
    for coset in L.cosets_with(lam1=(0, 0)):
        if any(coset.lam0) or coset.lam2 == (0, 0) or coset in seen:
            continue
        partner = L.negate(coset)
        seen.update({coset, partner})
        c = _as_int(F.coefficient(coset, 0), f"c_{coset.label()}(0)")
        if not c:
            continue
        if partner == coset:
            if c % 2:
                raise ConsistencyError(f"Нечётный показатель {c} у класса 2-кручения {coset.label()}")
            factors.append(ThetaFactor(coset.lam2, None, c // 2))
        else:
            rep = min(coset, partner)
            factors.append(ThetaFactor(rep.lam2, None, c, c))
    return factors


def _root_factors(L: WittLattice, chamber: Chamber0) -> List[ThetaFactor]:
    factors = []
    for root in chamber.positive_roots:
        for coset, c in root.cosets:
            c = _as_int(c, f"корень {root.vector}")
            if c < 0:
                raise MeromorphicFactorError(
                    f"Кратность {c} < 0 у корня {root.vector} (класс {coset.label()}): Ψ₀ мероморфна"
                )
            factors.append(ThetaFactor(coset.lam2, root.vector, c, c))
    return factors


def psi0(F: VectorValuedForm, L: WittLattice, chamber: Chamber0, order: Fraction) -> Psi0Result:
    """
    Ψ₀ до порядка order по q₁.

    Args:
        F: Входная форма.
        L: Решётка.
        chamber: Камера Вейля W₀.
        order: Требуемый порядок.

    Returns:
        Ряд Ψ₀ с показателем η и фазой.
    """
    order = Fraction(order)
    rank = L.L0.rank
    factors = _torsion_factors(F, L) + _root_factors(L, chamber)
    eta_exp = _as_int(F.constant_term(), "c₀(0)")
    phase_exp = 0
    for f in factors:
        # пара ±λ₂ или корень даёт η^{−c}; 2-кручение даёт η^{−c/2}
        eta_exp -= f.exponent
        phase_exp += f.phase
    width = order
    for _ in range(MAX_WIDENINGS):
        result = eta_power(eta_exp, width).with_rank(rank)
        for f in factors:
            if f.exponent:
                result = result * f.series(rank, width)
        if result.trunc >= order:
            result = result.truncate(order)
            logger.info(f"Ψ₀: множителей тета {len(factors)}, степень η = {eta_exp}, членов {len(result)} до порядка {order}")
            return Psi0Result(result, eta_exp, phase_exp, factors)
        width += order - result.trunc
    raise ConsistencyError(f"Не удалось получить Ψ₀ до порядка {order}")
