"""
Перебор векторов смежного класса λ₀ + L₀ с ограниченной нормой (Финке–Поуст).
"""

import logging
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from .posdef import PosDefLattice, Vector

logger = logging.getLogger(__name__)


def _integer_window(center: Fraction, radius_sq: Fraction) -> range:
    """Целые z с (z - center)² ≤ radius_sq."""
    if radius_sq < 0:
        return range(0)
    # isqrt по масштабированному числу даёт целую оценку, затем точная проверка краёв
    approx = math.isqrt(radius_sq.numerator // radius_sq.denominator + 1) + 1
    lo = math.floor(center) - approx
    hi = math.ceil(center) + approx
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def enumerate_by_norm(L0: PosDefLattice, lam0: Sequence[Fraction], bound: Fraction) -> List[Vector]:
    """
    Все x₀ ∈ lam0 + L₀ с Q(x₀) ≤ bound.

    Args:
        L0: Решётка.
        lam0: Представитель смежного класса (координаты в базисе L₀).
        bound: Верхняя граница для Q.

    Returns:
        Векторы, отсортированные по (Q(x₀), x₀); увеличение bound только дописывает хвост.
    """
    bound = Fraction(bound)
    n = L0.rank
    if len(lam0) != n:
        raise ValueError(f"Представитель класса должен иметь длину {n}")
    if bound < 0:
        return []
    if n == 0:
        return [()]
    lam0 = tuple(Fraction(x) for x in lam0)
    ldl = L0._ldl
    found: List[Tuple[Fraction, Vector]] = []
    x = [Fraction(0)] * n

    def descend(i: int, remaining: Fraction) -> None:
        d, mu = ldl[i]
        offset = sum((m * x[i + 1 + j] for j, m in enumerate(mu)), Fraction(0))
        # x_i = lam0_i + z, условие d·(x_i + offset)² ≤ remaining
        center = -offset - lam0[i]
        for z in _integer_window(center, remaining / d):
            x[i] = lam0[i] + z
            used = d * (x[i] + offset) ** 2
            if used > remaining:
                continue
            if i == 0:
                found.append((bound - remaining + used, tuple(x)))
            else:
                descend(i - 1, remaining - used)

    descend(n - 1, bound)
    found.sort()
    logger.debug(f"Перебор: класс {lam0}, граница {bound}, найдено {len(found)} векторов")
    return [v for _, v in found]
