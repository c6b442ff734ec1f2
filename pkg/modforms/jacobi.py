"""
Тета-функция Якоби ϑ₁ и слабая форма Якоби φ₀,₁.

Ряды по z хранятся как JacobiSeries ранга 1: ключ s означает характер e(s·z).
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Tuple, Union

from exactmath import I, CycRational, JacobiSeries

logger = logging.getLogger(__name__)

Order = Union[int, Fraction]


class DecompositionError(RuntimeError):
    """Тета-разложение формы Якоби дало несогласованные коэффициенты."""


def _half_integers(center: Fraction, radius_sq: Fraction):
    """Полуцелые s = n + ½ с (s − center)² < radius_sq."""
    if radius_sq <= 0:
        return
    reach = math.isqrt(math.ceil(radius_sq)) + 2
    base = math.floor(center)
    for n in range(base - reach, base + reach + 1):
        s = Fraction(2 * n + 1, 2)
        if (s - center) ** 2 < radius_sq:
            yield n, s


def jacobi_theta1(order: Order, shift: Tuple[Order, Order] = (0, 0)) -> JacobiSeries:
    """
    ϑ₁(z + t₁τ + t₀, τ) как ряд по q и e(s·z) (форма суммы).

    ϑ₁(z, τ) = Σ_n (−i)(−1)ⁿ q^{(n+½)²/2} e((n+½)z).

    Args:
        order: Порядок усечения по q.
        shift: Сдвиг (t₁, t₀) аргумента z.
    """
    order = Fraction(order)
    t1, t0 = Fraction(shift[0]), Fraction(shift[1])
    items = []
    # показатель ½(s + t₁)² − ½t₁² < order
    for n, s in _half_integers(-t1, 2 * order + t1 * t1):
        coeff = -I * (1 if n % 2 == 0 else -1)
        if t0:
            coeff = coeff * CycRational.root_of_unity(s * t0)
        items.append((s * s / 2 + s * t1, (s,), coeff))
    return JacobiSeries.build(1, items, trunc=order)


def jacobi_theta1_product(order: Order) -> JacobiSeries:
    """
    ϑ₁ по формуле произведения:
    −i q^{1/8} (ζ^{½} − ζ^{−½}) Π_{n≥1} (1 − qⁿζ)(1 − qⁿζ⁻¹)(1 − qⁿ).
    """
    order = Fraction(order)
    inner = order - Fraction(1, 8)
    result = JacobiSeries.build(1, [(0, (Fraction(1, 2),), 1), (0, (Fraction(-1, 2),), -1)]).truncate(inner)
    n = 1
    while n < inner:
        for key in ((1,), (-1,), (0,)):
            factor = JacobiSeries.build(1, [(0, (0,), 1), (n, key, -1)])
            result = (result * factor).truncate(inner)
        n += 1
    return result.shift(Fraction(1, 8), (0,), -I).truncate(order)


def _theta_constant_pair(kind: int, order: Fraction) -> Tuple[JacobiSeries, JacobiSeries]:
    """ϑ_kind(z) как ряд по z (ключи в ½ℤ) и его значение в нуле, q = e(τ)."""
    items = []
    reach = math.isqrt(math.ceil(2 * order)) + 2
    for n in range(-reach, reach + 1):
        s = Fraction(2 * n + 1, 2) if kind == 2 else Fraction(n)
        e = s * s / 2
        if e >= order:
            continue
        sign = -1 if kind == 4 and n % 2 else 1
        items.append((e, (s,), sign))
    series = JacobiSeries.build(1, items, trunc=order)
    return series, series.map_keys([(Fraction(0),)], 1)


def phi01_coefficients(order: Order) -> Dict[int, Dict[Fraction, Fraction]]:
    """
    Компоненты (F₀, F₁) тета-разложения φ₀,₁ = 4 Σ_{i=2,3,4} (ϑᵢ(z)/ϑᵢ(0))².

    Args:
        order: Порядок усечения компонент по q.

    Returns:
        Словарь μ -> {m: c_μ(m)} для m < order.
    """
    order = Fraction(order)
    work = Fraction(math.ceil(order) + 1)
    phi = JacobiSeries.zero(1)
    for kind in (2, 3, 4):
        theta_z, theta_0 = _theta_constant_pair(kind, work + 1)
        square_0 = theta_0 * theta_0
        inv = square_0.invert(square_0.trunc - 2 * square_0.min_exp)
        phi = phi + theta_z * theta_z * inv
    phi = phi.scalar_mul(4)
    if phi.trunc < work:
        raise DecompositionError(f"Окно φ₀,₁ сузилось до {phi.trunc} < {work}")
    table: Dict[int, Dict[Fraction, Fraction]] = {0: {}, 1: {}}
    for n, (r,), c in phi.items():
        if n.denominator != 1 or r.denominator != 1:
            raise DecompositionError(f"Нецелый член q^{n} ζ^{r} в φ₀,₁")
        value = c.to_fraction()
        mu = int(r) % 2
        m = n - r * r / 4
        previous = table[mu].get(m)
        if previous is not None and previous != value:
            raise DecompositionError(f"Коэффициент c({n}, {r}) = {value} не совпадает с {previous} при m = {m}")
        table[mu][m] = value
    # член с r = μ и n = m + μ²/4 присутствует в окне, если n < work
    for mu in (0, 1):
        table[mu] = {m: c for m, c in table[mu].items() if m < order and c}
    logger.debug(f"φ₀,₁: компоненты до порядка {order}, ненулевых коэффициентов {sum(map(len, table.values()))}")
    return table
