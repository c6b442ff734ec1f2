"""
Вклад нулевой орбиты: показатель I₀ двумя способами и тождество векторной системы.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from exactmath import JacobiSeries
from lattice import WittLattice, discriminant_cosets, enumerate_by_norm
from modforms import VectorValuedForm, classical_series, sigma1, theta_coset

from .chamber import isotropic_cosets
from .errors import ConsistencyError

logger = logging.getLogger(__name__)


def _positive_norms(F: VectorValuedForm):
    """Множество {0} ∪ {−m : c(m) ≠ 0, m < 0}."""
    return sorted({Fraction(0)} | {-m for _, m, _ in F.principal_part})


def _sigma_sum(F: VectorValuedForm, L: WittLattice) -> Fraction:
    total = Fraction(0)
    for lam0, _ in discriminant_cosets(L.L0):
        cosets = isotropic_cosets(L, lam0)
        for m in _positive_norms(F):
            weight = sum((F.coefficient(c, -m) for c in cosets), Fraction(0))
            if not weight:
                continue
            for x in enumerate_by_norm(L.L0, lam0, m):
                total += weight * sigma1(m - L.L0.Q(x))
    return -total


def _e2_constant_term(F: VectorValuedForm, L: WittLattice) -> Fraction:
    m_max = F.m_max
    e2 = classical_series('E2', m_max + 1)
    ct = Fraction(0)
    for lam0, _ in discriminant_cosets(L.L0):
        items = []
        for c in isotropic_cosets(L, lam0):
            for m, value in F.coefficients(c, 1).items():
                items.append((m, (), value))
        if not items:
            continue
        f_o = JacobiSeries.build(0, items, trunc=1)
        # θ нужен только до q^{m_max} включительно
        product = f_o * theta_coset(L.L0, lam0, m_max + Fraction(1, 2)) * e2
        ct += product.coefficient(0).to_fraction()
    return ct / 24


def compute_I0(F: VectorValuedForm, L: WittLattice, route: str = 'sigma_sum') -> Fraction:
    """
    Показатель I₀ при q₂.

    Args:
        route: 'sigma_sum' — через σ₁ по векторам с Q(x₀) ≤ m;
               'e2_ct' — через постоянный член E₂ · Σ F°θ / 24.
    """
    if route == 'sigma_sum':
        return _sigma_sum(F, L)
    if route == 'e2_ct':
        return _e2_constant_term(F, L)
    raise ValueError(f"Неизвестный способ вычисления I₀: {route}")


def cross_checked_I0(F: VectorValuedForm, L: WittLattice) -> Fraction:
    """I₀, вычисленный обоими способами; расхождение прерывает вычисление."""
    first = compute_I0(F, L, 'sigma_sum')
    second = compute_I0(F, L, 'e2_ct')
    if first != second:
        raise ConsistencyError(f"I₀ расходится: sigma_sum = {first}, e2_ct = {second}")
    if (24 * first).denominator != 1:
        raise ConsistencyError(f"24·I₀ = {24 * first} не целое")
    logger.info(f"I₀ = {first} (оба способа совпали)")
    return first


@dataclass
class VectorSystemReport:
    lhs: np.ndarray
    rhs: np.ndarray
    equal: bool

    @property
    def difference(self) -> np.ndarray:
        return self.lhs - self.rhs


def vector_system_check(F: VectorValuedForm, L: WittLattice, I0: Fraction = None) -> VectorSystemReport:
    """
    Матричная форма тождества 4I₀Q(v) = Σ_{m>0} Σ_λ c_λ(−m) Σ_{Q(x₀)=m} (x₀, v)².

    Returns:
        lhs = 2·I₀·G₀ и rhs = Σ c·(G₀x₀)(G₀x₀)ᵀ.
    """
    if I0 is None:
        I0 = compute_I0(F, L)
    r = L.L0.rank
    rhs = np.full((r, r), Fraction(0), dtype=object)
    for lam0, _ in discriminant_cosets(L.L0):
        cosets = isotropic_cosets(L, lam0)
        for m in _positive_norms(F):
            if m == 0:
                continue
            weight = sum((F.coefficient(c, -m) for c in cosets), Fraction(0))
            if not weight:
                continue
            for x in enumerate_by_norm(L.L0, lam0, m):
                if L.L0.Q(x) != m:
                    continue
                g = np.array(L.L0.gram_image(x), dtype=object)
                rhs = rhs + weight * np.outer(g, g)
    lhs = np.full((r, r), Fraction(0), dtype=object)
    for i, row in enumerate(L.L0.rows):
        for j, g in enumerate(row):
            lhs[i, j] = 2 * I0 * g
    equal = bool(np.array_equal(lhs, rhs))
    if not equal:
        logger.warning(f"Тождество векторной системы нарушено: разность\n{lhs - rhs}")
    return VectorSystemReport(lhs, rhs, equal)
