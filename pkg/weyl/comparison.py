"""
Произведение Борчердса по векторам x₀₀ с (x₀₀, y) > 0 и его сравнение
с разложением Фурье–Якоби.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from exactmath import CycRational, GradedFJSeries, I, JacobiSeries
from borcherds import (
    Chamber0,
    ConsistencyError,
    FactorMonomial,
    MeromorphicFactorError,
    IdentityCheck,
    apply_factor,
    choose_chamber,
    compare,
    fj_expansion,
    psi0,
)
from lattice import WittLattice, enumerate_by_norm
from lattice.posdef import Vector
from modforms import VectorValuedForm, require_valid

from .weyl_vector import WeylData, select_chamber_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositiveVector:
    """x₀₀ = b·e₁ − x₀ − a·e₁′ с (x₀₀, y) > 0 и кратностью c(ab − Q(x₀))."""

    a: int
    b: int
    x0: Vector
    multiplicity: Fraction


def _lemma_positive(a: int, b: int, x0: Vector, chamber: Chamber0) -> bool:
    if a > 0:
        return True
    if a == 0 and b > 0:
        return True
    if a == 0 and b == 0:
        return any(r.vector == x0 for r in chamber.positive_roots)
    return False


def positive_vectors(
    F: VectorValuedForm,
    L: WittLattice,
    weyl: WeylData,
    chamber: Chamber0,
    K: int,
    window: Fraction,
) -> List[PositiveVector]:
    """
    Все x₀₀ с a ≤ K и b < window, c(−Q(x₀₀)) ≠ 0 и (x₀₀, y) > 0.

    Перебор идёт по окну a ∈ [−1, K], b ∈ [−window, window); на каждом векторе
    знак (x₀₀, y) сверяется с описанием положительного множества.
    """
    frame = weyl.frame
    y = weyl.witness_vector
    zero = L.zero()
    m_max = F.m_max
    low = -int(window) - 1
    found = []
    for a in range(-1, K + 1):
        for b in range(low, int(window) + 1):
            if b >= window:
                break
            reach = a * b + m_max
            if reach < 0:
                continue
            for x0 in enumerate_by_norm(L.L0, (Fraction(0),) * L.L0.rank, reach):
                c = F.coefficient(zero, a * b - L.L0.Q(x0))
                if not c or (a == 0 and b == 0 and not any(x0)):
                    continue
                height = frame.pair(frame.from_abx(a, b, x0), y)
                if height == 0:
                    raise ConsistencyError(f"Вектор (a={a}, b={b}, x₀={x0}) лежит на стене камеры")
                positive = height > 0
                if positive != _lemma_positive(a, b, x0, chamber):
                    raise ConsistencyError(
                        f"Знак (x₀₀, y) для (a={a}, b={b}, x₀={x0}) не согласуется с описанием камеры"
                    )
                if positive:
                    found.append(PositiveVector(a, b, x0, c))
    logger.debug(f"Положительных векторов x₀₀ в окне: {len(found)}")
    return found


def _power(base: JacobiSeries, c: Fraction) -> JacobiSeries:
    if c.denominator != 1:
        raise ConsistencyError(f"Нецелая кратность {c}")
    c = int(c)
    if c >= 0:
        return base ** c
    return base.invert(base.trunc) ** (-c)


def prefactor_unit(B: Fraction) -> CycRational:
    """(−1)^{B/2} i^B."""
    if B.denominator != 1:
        raise ConsistencyError(f"B = {B} не целое")
    return CycRational.root_of_unity(B / 4) * I ** (int(B) % 4)


@dataclass
class BFactors:
    """Произведения по b > 0, по корням при a = b = 0 и префактор с ρ₀₀."""

    b2: JacobiSeries
    b3: JacobiSeries
    b4: JacobiSeries
    q2_exponent: Fraction


def b_factor_split(
    F: VectorValuedForm,
    L: WittLattice,
    weyl: WeylData,
    chamber: Chamber0,
    order: Fraction,
    vectors: Optional[List[PositiveVector]] = None,
) -> BFactors:
    """
    Части a = 0 произведения Борчердса до порядка order.

    Показатель q₂ префактора равен −2·(коэффициент ρ₀₀ при e₁′) = I₀.
    """
    order = Fraction(order)
    rank = L.L0.rank
    if vectors is None:
        vectors = positive_vectors(F, L, weyl, chamber, 0, order)
    b2 = JacobiSeries.one(rank).truncate(order)
    b3 = JacobiSeries.one(rank)
    for v in vectors:
        if v.a != 0:
            continue
        key = tuple(-t for t in v.x0)
        if v.b > 0:
            if v.b < order:
                base = JacobiSeries.build(rank, [(0, (0,) * rank, 1), (v.b, key, -1)], trunc=order)
                b2 = b2 * _power(base, v.multiplicity)
        else:
            if v.multiplicity < 0:
                raise MeromorphicFactorError(f"Кратность {v.multiplicity} < 0 у корня {v.x0}")
            base = JacobiSeries.build(rank, [(0, (0,) * rank, 1), (0, key, -1)])
            b3 = b3 * base ** int(v.multiplicity)
    alpha, rho0, beta = weyl.rho00
    b4 = JacobiSeries.monomial(alpha, rho0, prefactor_unit(weyl.B))
    return BFactors(b2, b3, b4, -2 * beta)


def borcherds_side_product(
    F: VectorValuedForm,
    L: WittLattice,
    weyl: WeylData,
    chamber: Chamber0,
    K: int,
    order: Fraction,
) -> GradedFJSeries:
    """
    (−1)^{B/2} i^B e((ρ₀₀, 𝔷)) Π_{(x₀₀, y) > 0} (1 − e((x₀₀, 𝔷)))^{c(−Q(x₀₀))} по степеням q₂ ≤ K.
    """
    order = Fraction(order)
    rank = L.L0.rank
    alpha = weyl.rho00[0]
    window = order + K * F.m_max + max(Fraction(0), -alpha)
    vectors = positive_vectors(F, L, weyl, chamber, K, window)
    acc = GradedFJSeries(0, [JacobiSeries.one(rank).truncate(window)] + [JacobiSeries.zero(rank, window)] * K)
    for v in vectors:
        if v.a > 0:
            acc = apply_factor(acc, FactorMonomial(v.a, Fraction(v.b), v.x0, Fraction(0), v.multiplicity), K)
    parts = b_factor_split(F, L, weyl, chamber, window, vectors)
    total = acc * (parts.b2 * parts.b3 * parts.b4)
    for k, g in enumerate(total.grades):
        if g.trunc < order:
            raise ConsistencyError(f"Степень {k}: окно {g.trunc} меньше порядка {order}")
    return GradedFJSeries(parts.q2_exponent, total.truncate_q1(order).grades)


def find_unit(lhs: GradedFJSeries, rhs: GradedFJSeries) -> CycRational:
    """Скаляр u с lhs = u·rhs по первому ненулевому коэффициенту rhs."""
    for k in range(min(lhs.K, rhs.K) + 1):
        for e, v, c in rhs.grades[k].items():
            return lhs.grades[k].coefficient(e, v) / c
    raise ConsistencyError("Правая часть равна нулю во всём окне")


@dataclass
class WeylComparison:
    weyl: WeylData
    unit: CycRational
    check: IdentityCheck
    split_check: IdentityCheck

    @property
    def holds(self) -> bool:
        return self.check.holds and self.split_check.holds and self.unit.has_unit_modulus()


def compare_with_fj(
    F: VectorValuedForm,
    L: WittLattice,
    K: int,
    order: Fraction,
    chamber: Optional[Chamber0] = None,
) -> WeylComparison:
    """
    Сравнивает произведение Борчердса с разложением Фурье–Якоби до единого скаляра.

    Returns:
        Найденный скаляр и результаты обеих проверок: равенства рядов
        и совпадения B₂·B₃·B₄ с q₂^{I₀}Ψ₀ с тем же скаляром.
    """
    order = Fraction(order)
    require_valid(F, L)
    if chamber is None:
        chamber = choose_chamber(F, L)
    weyl = select_chamber_witness(F, L, chamber)
    fj = fj_expansion(F, L, K, order, chamber)
    side = borcherds_side_product(F, L, weyl, chamber, K, order)
    unit = find_unit(side, fj.psi)
    check = compare("произведение Борчердса = u·Ψ", side, fj.psi * unit, order)
    parts = b_factor_split(F, L, weyl, chamber, order + max(Fraction(0), -weyl.rho00[0]))
    zero = GradedFJSeries(parts.q2_exponent, [(parts.b2 * parts.b3 * parts.b4).truncate(order)])
    base = psi0(F, L, chamber, order).series
    split = compare("B₂·B₃·B₄ = u·q₂^{I₀}Ψ₀", zero, GradedFJSeries(fj.I0, [base.scalar_mul(unit)]), order)
    logger.info(f"Сравнение с произведением Борчердса: скаляр {unit}, {'совпало' if check.holds else 'расхождение'}")
    return WeylComparison(weyl, unit, check, split)
