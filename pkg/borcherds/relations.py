"""
Полиномиальные соотношения между Ψ_k и Θ_{a,n}, знак первой степени
и ковариантность Θ_{a,n} при сдвиге w₀.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import factorial
from sympy.utilities.iterables import partitions

from exactmath import JacobiSeries, substitute_w0_translation
from lattice import WittLattice
from modforms import VectorValuedForm

from .errors import ConsistencyError
from .expansion import FJResult, log_series
from .identity import IdentityCheck, compare
from .theta_an import theta_an

logger = logging.getLogger(__name__)

Thetas = Dict[Tuple[int, int], JacobiSeries]


def explicit_polynomial(thetas: Thetas, k: int) -> JacobiSeries:
    """Ψ_k/Ψ₀ в явном виде для k ≤ 3."""
    t = thetas
    if k == 1:
        return -t[(1, 1)]
    if k == 2:
        return -t[(2, 1)] - t[(1, 2)].scalar_mul(Fraction(1, 2)) + (t[(1, 1)] ** 2).scalar_mul(Fraction(1, 2))
    if k == 3:
        return (
            -t[(3, 1)]
            - t[(1, 3)].scalar_mul(Fraction(1, 3))
            + t[(1, 1)] * t[(2, 1)]
            + (t[(1, 1)] * t[(1, 2)]).scalar_mul(Fraction(1, 2))
            - (t[(1, 1)] ** 3).scalar_mul(Fraction(1, 6))
        )
    raise ValueError(f"Явная формула есть только для степеней 1..3, запрошена {k}")


def bell_polynomial(thetas: Thetas, k: int, rank: int) -> JacobiSeries:
    """
    Ψ_k/Ψ₀ как полный многочлен Белла от A_j = −Σ_{an=j} Θ_{a,n}/n:
    сумма по разбиениям k произведений A_j^{m_j}/m_j!.
    """
    logs = log_series(thetas, k, rank)
    total = JacobiSeries.zero(rank)
    for parts in partitions(k):
        term = JacobiSeries.one(rank)
        denom = 1
        for j, mult in parts.items():
            term = term * logs[j] ** mult
            denom *= int(factorial(mult))
        total = total + term.scalar_mul(Fraction(1, denom))
    return total


def check_fj_polynomials(result: FJResult) -> List[IdentityCheck]:
    """Сравнивает Ψ_k с Ψ₀·P_k по явным формулам (k ≤ 3) и по многочленам Белла."""
    if not result.thetas:
        raise ValueError("Для проверки нужны ряды Θ_{a,n} из разложения через экспоненту")
    rank = result.psi.rank
    base = result.psi0.series
    checks = []
    for k in range(1, result.K + 1):
        if k <= 3:
            rhs = base * explicit_polynomial(result.thetas, k)
            checks.append(compare(f"Ψ_{k} явная формула", result.psi[k], rhs, result.order))
        rhs = base * bell_polynomial(result.thetas, k, rank)
        checks.append(compare(f"Ψ_{k} многочлен Белла", result.psi[k], rhs, result.order))
    return checks


def grade1_sign(result: FJResult) -> int:
    """Знак s в Ψ₁ = s·Θ₁,₁·Ψ₀."""
    if result.K < 1:
        raise ValueError("Нужна хотя бы первая степень q₂")
    product = result.psi0.series * result.thetas[(1, 1)]
    for s in (-1, 1):
        if compare("Ψ₁", result.psi[1], product.scalar_mul(s), result.order).holds:
            return s
    raise ConsistencyError("Ψ₁ не равно ±Θ₁,₁·Ψ₀")


def _ceil_sqrt(x: Fraction) -> int:
    if x <= 0:
        return 0
    return math.isqrt(math.ceil(x)) + 1


def covariance_source_order(F: VectorValuedForm, a: int, n: int, qb: Fraction, order: Fraction) -> Fraction:
    """
    Порядок исходного Θ_{a,n}, при котором сдвинутый ряд точен до order.

    Член с m + Q(y) < a(order/n + a·Q(b₁)) приходит из показателя
    (n/a)(m + Q(y) + a(y, b₁) + a²Q(b₁)), а |(y, b₁)| ≤ 2√(Q(y)Q(b₁)).
    """
    bound = a * (Fraction(order) / n + a * qb)
    reach = max(bound + F.m_max, Fraction(0))
    return Fraction(n, a) * (bound + 2 * a * _ceil_sqrt(reach * qb) + a * a * qb) + 1


def check_translation_covariance(
    F: VectorValuedForm,
    L: WittLattice,
    a: int,
    n: int,
    b1: Sequence[int],
    b2: Sequence[int],
    order: Fraction,
) -> IdentityCheck:
    """
    Θ_{a,n}(w₀ + b₁τ₁ + b₂) = q₁^{−anQ(b₁)} X^{−an·b₁} Θ_{a,n}(w₀) для b₁, b₂ ∈ L₀.
    """
    order = Fraction(order)
    b1 = tuple(int(x) for x in b1)
    b2 = tuple(int(x) for x in b2)
    qb = L.L0.Q(b1)
    source = theta_an(F, L, a, n, covariance_source_order(F, a, n, qb, order))
    lhs = substitute_w0_translation(source, L.L0.rows, b1, b2, order=order)
    rhs = theta_an(F, L, a, n, order + a * n * qb).shift(-a * n * qb, tuple(-a * n * x for x in b1))
    return compare(f"ковариантность Θ_{a},{n} при b₁ = {b1}", lhs, rhs, order)
