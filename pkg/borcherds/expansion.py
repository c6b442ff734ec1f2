"""
Разложение Фурье–Якоби Ψ = q₂^{I₀} Σ_k Ψ_k q₂^k двумя независимыми путями:
через экспоненту от рядов Θ_{a,n} и через бесконечное произведение.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import binomial

from exactmath import CycRational, GradedFJSeries, JacobiSeries, series_exp_graded
from lattice import WittLattice
from modforms import VectorValuedForm, require_valid

from .chamber import Chamber0, choose_chamber
from .errors import ConsistencyError
from .psi0 import Psi0Result, psi0
from .theta_an import FactorMonomial, factor_monomials, theta_an
from .zero_orbit import cross_checked_I0

logger = logging.getLogger(__name__)


@dataclass
class FJResult:
    """
    Результат разложения.

    Attributes:
        I0: Показатель q₂ при Ψ₀.
        psi: Градуированный ряд со сдвигом I₀.
        chamber: Камера W₀.
        psi0: Ψ₀ на расширенном окне.
        order: Гарантированный порядок по q₁.
        window: Расширенный порядок промежуточных рядов.
        thetas: Ряды Θ_{a,n} на расширенном окне (только для пути через экспоненту).
    """

    I0: Fraction
    psi: GradedFJSeries
    chamber: Chamber0
    psi0: Psi0Result
    order: Fraction
    window: Fraction
    thetas: Dict[Tuple[int, int], JacobiSeries] = field(default_factory=dict)

    @property
    def phase(self) -> CycRational:
        return self.psi0.phase

    @property
    def K(self) -> int:
        return self.psi.K


@dataclass
class _Setup:
    chamber: Chamber0
    I0: Fraction
    psi0: Psi0Result
    window: Fraction


def _prepare(
    F: VectorValuedForm,
    L: WittLattice,
    K: int,
    order: Fraction,
    chamber: Optional[Chamber0],
    witness: Optional[Sequence[Fraction]],
) -> _Setup:
    if K < 0:
        raise ValueError(f"Степень q₂ должна быть неотрицательной: {K}")
    require_valid(F, L)
    if chamber is None:
        chamber = choose_chamber(F, L, witness)
    I0 = cross_checked_I0(F, L)
    widened = Fraction(order) + K * F.m_max
    p0 = psi0(F, L, chamber, widened)
    low = p0.series.min_exp
    window = widened - low if low < 0 else widened
    logger.info(f"Окно: порядок {order}, расширенный {widened}, для Θ {window}")
    return _Setup(chamber, I0, p0, window)


def _finish(grades: GradedFJSeries, setup: _Setup, order: Fraction) -> GradedFJSeries:
    psi = grades * setup.psi0.series
    for k, g in enumerate(psi.grades):
        if g.trunc < order:
            raise ConsistencyError(f"Степень {k}: окно {g.trunc} меньше порядка {order}")
    return GradedFJSeries(setup.I0, psi.truncate_q1(order).grades)


def log_series(thetas: Dict[Tuple[int, int], JacobiSeries], K: int, rank: int) -> GradedFJSeries:
    """−Σ_{a,n} (1/n) q₂^{an} Θ_{a,n} как градуированный ряд без сдвига."""
    grades: List[JacobiSeries] = [JacobiSeries.zero(rank)]
    for k in range(1, K + 1):
        acc = JacobiSeries.zero(rank)
        for (a, n), theta in thetas.items():
            if a * n == k:
                acc = acc + theta.scalar_mul(Fraction(-1, n))
        grades.append(acc)
    return GradedFJSeries(0, grades)


def collect_thetas(F: VectorValuedForm, L: WittLattice, K: int, window: Fraction) -> Dict[Tuple[int, int], JacobiSeries]:
    thetas = {}
    for a in range(1, K + 1):
        monomials = factor_monomials(F, L, a, window)
        for n in range(1, K // a + 1):
            thetas[(a, n)] = theta_an(F, L, a, n, window, monomials)
    return thetas


def fj_expansion(
    F: VectorValuedForm,
    L: WittLattice,
    K: int,
    order: Fraction,
    chamber: Optional[Chamber0] = None,
    witness: Optional[Sequence[Fraction]] = None,
) -> FJResult:
    """
    Ψ_k для k ≤ K до порядка order через Ψ = q₂^{I₀} Ψ₀ exp(−Σ (1/n) q₂^{an} Θ_{a,n}).

    Args:
        F: Входная форма (проверяется перед вычислением).
        L: Решётка.
        K: Наибольшая степень q₂.
        order: Порядок по q₁, одинаковый для всех степеней.
        chamber: Камера W₀; по умолчанию строится по witness.
        witness: Вектор, задающий камеру.

    Raises:
        ConsistencyError: Способы вычисления I₀ расходятся или окно оказалось меньше order.
        MeromorphicFactorError: Отрицательная кратность корня.
    """
    order = Fraction(order)
    setup = _prepare(F, L, K, order, chamber, witness)
    rank = L.L0.rank
    thetas = collect_thetas(F, L, K, setup.window)
    exp_part = series_exp_graded(log_series(thetas, K, rank))
    psi = _finish(exp_part, setup, order)
    logger.info(f"Разложение через Θ: K = {K}, I₀ = {setup.I0}, порядок {order}")
    return FJResult(setup.I0, psi, setup.chamber, setup.psi0, order, setup.window, thetas)


def apply_factor(acc: GradedFJSeries, f: FactorMonomial, K: int) -> GradedFJSeries:
    """Умножает на (1 − q₂^a q₁^b X^{−x₀} e(−λ₂₂))^c, разложенный до q₂^K."""
    c = int(f.multiplicity)
    steps = [(j, CycRational.rational(int(binomial(c, j)) * (-1) ** j) * f.character(j)) for j in range(1, K // f.a + 1)]
    steps = [(j, coeff) for j, coeff in steps if not coeff.is_zero()]
    if not steps:
        return acc
    grades = list(acc.grades)
    for k in range(K, 0, -1):
        total = acc.grades[k]
        for j, coeff in steps:
            src = k - j * f.a
            if src < 0:
                break
            part = acc.grades[src]
            if part.is_zero() and part.is_exact():
                continue
            total = total + part.shift(j * f.exponent, tuple(-j * x for x in f.x0), coeff)
        grades[k] = total
    return GradedFJSeries(acc.offset, grades)


def product_expansion(
    F: VectorValuedForm,
    L: WittLattice,
    K: int,
    order: Fraction,
    chamber: Optional[Chamber0] = None,
    witness: Optional[Sequence[Fraction]] = None,
) -> FJResult:
    """
    Ψ_k для k ≤ K до порядка order, перемножая множители (i) с a ≤ K напрямую.

    Множители с показателем q₁ не меньше расширенного окна не влияют на результат.
    """
    order = Fraction(order)
    setup = _prepare(F, L, K, order, chamber, witness)
    rank = L.L0.rank
    acc = GradedFJSeries(
        0, [JacobiSeries.one(rank).truncate(setup.window)] + [JacobiSeries.zero(rank, setup.window)] * K
    )
    count = 0
    for a in range(1, K + 1):
        for f in factor_monomials(F, L, a, setup.window):
            if f.multiplicity.denominator != 1:
                raise ConsistencyError(f"Нецелая кратность {f.multiplicity} в множителе (i)")
            acc = apply_factor(acc, f, K)
            count += 1
    psi = _finish(acc, setup, order)
    logger.info(f"Разложение через произведение: множителей {count}, K = {K}, порядок {order}")
    return FJResult(setup.I0, psi, setup.chamber, setup.psi0, order, setup.window)
