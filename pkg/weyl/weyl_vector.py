"""
Константы m_max и B, выбор вектора y в камере Вейля и вектор Вейля ρ₀₀.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from borcherds import Chamber0, compute_I0
from lattice import LatticeError, WittLattice
from lattice.posdef import Vector
from modforms import VectorValuedForm

from .frame import Triple, V00Frame

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeylData:
    """
    Данные камеры Вейля на L₀₀.

    witness_y — тройка (y₂, y₀, y₁) с y₁ = 1; rho00 — тройка (α, x, β) = αe₁ + x + βe₁′.
    """

    m_max: Fraction
    B: Fraction
    witness_y: Tuple[Fraction, Vector, Fraction]
    rho00: Triple
    frame: V00Frame

    @property
    def witness_vector(self) -> Triple:
        y2, y0, y1 = self.witness_y
        return self.frame.witness(y2, y0, y1)


def require_unimodular(L: WittLattice) -> None:
    if L.N != 1 or not L.L0.is_unimodular():
        raise LatticeError(f"Сравнение с произведением Борчердса требует унимодулярную L₀ и N = 1: {L!r}")


def root_sum(chamber: Chamber0) -> Fraction:
    """B = ½ Σ_{x₀≠0} c(−Q(x₀)) по всем корням."""
    return sum((c for r in chamber.roots for _, c in r.cosets), Fraction(0)) / 2


def weyl_constants(F: VectorValuedForm, L: WittLattice, chamber: Chamber0) -> Tuple[Fraction, Fraction]:
    """
    (m_max, B) для унимодулярной решётки.

    Raises:
        LatticeError: Решётка не унимодулярна.
        ValueError: Главная часть формы пуста.
    """
    require_unimodular(L)
    if not F.principal_part:
        raise ValueError(f"У формы {F.name} нет главной части: m_max не определено")
    return F.m_max, root_sum(chamber)


def select_chamber_witness(
    F: VectorValuedForm,
    L: WittLattice,
    chamber: Chamber0,
    y2: Optional[Fraction] = None,
) -> WeylData:
    """
    Строит y = (y₂, −εv, 1) с y₂ = 4m_max + 3 и ε, при котором |(α₀, εv)| < ½ для всех корней.

    Args:
        y2: Явное значение y₂; должно превышать 4m_max + 2.
    """
    m_max, B = weyl_constants(F, L, chamber)
    threshold = 4 * m_max + 2
    if y2 is None:
        y2 = threshold + 1
    elif Fraction(y2) <= threshold:
        raise ValueError(f"y₂ = {y2} не превышает 4·m_max + 2 = {threshold}")
    biggest = max((abs(L.L0.pair(r.vector, chamber.witness)) for r in chamber.roots), default=Fraction(0))
    eps = 1 / (2 * biggest + 1)
    y0 = tuple(-eps * t for t in chamber.witness)
    for r in chamber.positive_roots:
        # положительные корни W₀ отрицательны на y₀
        value = L.L0.pair(r.vector, y0)
        if not -Fraction(1, 2) < value < 0:
            raise ValueError(f"Корень {r.vector}: (α₀, y₀) = {value} вне (−½, 0)")
    frame = V00Frame(L.L0)
    rho = weyl_vector(F, L, chamber, B)
    data = WeylData(m_max, B, (Fraction(y2), y0, Fraction(1)), rho, frame)
    logger.info(f"Камера Вейля L₀₀: m_max = {m_max}, B = {B}, y₂ = {y2}")
    return data


def weyl_vector(F: VectorValuedForm, L: WittLattice, chamber: Chamber0, B: Optional[Fraction] = None) -> Triple:
    """
    ρ₀₀ = ½ Σ_{x₀>0} c(−Q(x₀)) x₀ − ½I₀e₁′ + (c₀(0) + 2B)/24 · e₁.
    """
    if B is None:
        B = root_sum(chamber)
    rank = L.L0.rank
    rho0 = [Fraction(0)] * rank
    for r in chamber.positive_roots:
        for _, c in r.cosets:
            for i, t in enumerate(r.vector):
                rho0[i] += c * t / 2
    I0 = compute_I0(F, L)
    alpha = (F.constant_term() + 2 * B) / 24
    return V00Frame(L.L0).vector(alpha, rho0, -I0 / 2)
