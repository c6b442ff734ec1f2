"""
Корни формы F в L₀^∨ и камера Вейля W₀.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from lattice import DiscCoset, WittLattice, discriminant_cosets, enumerate_by_norm
from lattice.posdef import Vector
from modforms import VectorValuedForm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Root:
    """
    Корень α₀ ∈ L₀^∨: Q(α₀) > 0 и c_λ(−Q(α₀)) ≠ 0 для некоторого λ с λ₁ = 0, λ₀ ≡ α₀.

    cosets — все такие классы λ вместе с кратностями c_λ(−Q(α₀)).
    """

    vector: Vector
    norm: Fraction
    cosets: Tuple[Tuple[DiscCoset, Fraction], ...]

    def negate(self, L: WittLattice) -> 'Root':
        return Root(tuple(-x for x in self.vector), self.norm, tuple((L.negate(c), m) for c, m in self.cosets))


@dataclass(frozen=True)
class Chamber0:
    roots: Tuple[Root, ...]
    witness: Vector
    positive_roots: Tuple[Root, ...]


def isotropic_cosets(L: WittLattice, lam0: Sequence[Fraction]) -> List[DiscCoset]:
    """Классы λ с λ₁ = 0 и заданной λ₀-компонентой (все λ₂)."""
    target = L.canonical(lam0).lam0
    return [c for c in L.cosets if c.lam1 == (0, 0) and c.lam0 == target]


def find_roots(F: VectorValuedForm, L: WittLattice) -> List[Root]:
    """Все корни α₀ с 0 < Q(α₀) ≤ m_max."""
    m_max = F.m_max
    roots = []
    for lam0, _ in discriminant_cosets(L.L0):
        candidates = isotropic_cosets(L, lam0)
        for x in enumerate_by_norm(L.L0, lam0, m_max):
            q = L.L0.Q(x)
            if q == 0:
                continue
            hits = tuple((c, F.coefficient(c, -q)) for c in candidates if F.coefficient(c, -q))
            if hits:
                roots.append(Root(x, q, hits))
    return roots


def _default_witness(L: WittLattice, roots: Sequence[Root]) -> Vector:
    rank = L.L0.rank
    biggest = max((abs(x) for r in roots for x in r.vector), default=Fraction(1))
    t = 1 / (1 + biggest * rank * 2 * L.L0.exponent)
    while True:
        v = tuple(t ** i for i in range(rank))
        if all(L.L0.pair(r.vector, v) != 0 for r in roots):
            return v
        t /= 2


def choose_chamber(F: VectorValuedForm, L: WittLattice, witness: Optional[Sequence[Fraction]] = None) -> Chamber0:
    """
    Строит камеру W₀ с детерминированным свидетелем v.

    Args:
        F: Входная форма.
        L: Решётка.
        witness: Явный вектор v; по умолчанию (1, t, t², ...).

    Returns:
        Камера с положительными корнями (α₀, v) > 0.
    """
    roots = find_roots(F, L)
    if witness is None:
        v = _default_witness(L, roots)
    else:
        v = tuple(Fraction(x) for x in witness)
        walls = [r.vector for r in roots if L.L0.pair(r.vector, v) == 0]
        if walls:
            raise ValueError(f"Свидетель {v} лежит на стене корня {walls[0]}")
    positive = tuple(r for r in roots if L.L0.pair(r.vector, v) > 0)
    logger.info(f"Камера Вейля: корней {len(roots)}, положительных {len(positive)}")
    return Chamber0(tuple(roots), v, positive)
