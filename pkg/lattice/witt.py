"""
Решётка L = N·M_{U'}^∨ + L₀ + M_U в адаптированных координатах и её дискриминантные классы.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Any, Dict, List, Tuple

from .posdef import BUILTIN_GRAMS, LatticeError, PosDefLattice, Vector, discriminant_cosets, reduce_mod_one

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DiscCoset:
    """
    Класс λ = λ₀ + λ₁ + λ₂ в L^∨/L.

    lam0 — координаты в [0,1), lam1 ∈ (ℤ/N)², lam2 ∈ (N⁻¹ℤ/ℤ)² приведены к [0,1).
    """

    lam0: Vector
    lam1: Tuple[int, int]
    lam2: Tuple[Fraction, Fraction]

    def negate(self, N: int) -> 'DiscCoset':
        return DiscCoset(
            reduce_mod_one([-x for x in self.lam0]),
            ((-self.lam1[0]) % N, (-self.lam1[1]) % N),
            ((-self.lam2[0]) % 1, (-self.lam2[1]) % 1),
        )

    def is_zero(self) -> bool:
        return not any(self.lam0) and not any(self.lam1) and not any(self.lam2)

    def label(self) -> str:
        l0 = ",".join(str(x) for x in self.lam0)
        return f"({l0}|{self.lam1[0]},{self.lam1[1]}|{self.lam2[0]},{self.lam2[1]})"


class WittLattice:
    """
    Решётка сигнатуры (rank(L₀)+2, 2) с гиперболическими плоскостями, масштабированными на N.

    Args:
        L0: Положительно определённый блок.
        N: Масштабирующее целое.
    """

    def __init__(self, L0: PosDefLattice, N: int = 1):
        if N < 1:
            raise LatticeError(f"N должно быть положительным: {N}")
        self.L0 = L0
        self.N = N
        torsion = [Fraction(k, N) for k in range(N)]
        self.cosets: List[DiscCoset] = [
            DiscCoset(lam0, (a1, a2), (b1, b2))
            for (lam0, _), a1, a2, b1, b2 in product(discriminant_cosets(L0), range(N), range(N), torsion, torsion)
        ]
        self._index = {c: i for i, c in enumerate(self.cosets)}
        logger.debug(f"Решётка Витта: ранг L₀ = {L0.rank}, N = {N}, классов {len(self.cosets)}")

    @property
    def n(self) -> int:
        """Размерность положительной части: rank(L₀) + 2."""
        return self.L0.rank + 2

    @property
    def weight(self) -> Fraction:
        """Вес входной формы: 1 − n/2."""
        return 1 - Fraction(self.n, 2)

    def Q(self, coset: DiscCoset) -> Fraction:
        """Q(λ) по модулю 1."""
        q = self.L0.Q(coset.lam0) + coset.lam1[0] * coset.lam2[0] + coset.lam1[1] * coset.lam2[1]
        return q % 1

    def canonical(self, lam0, lam1=(0, 0), lam2=(0, 0)) -> DiscCoset:
        """Канонический представитель по произвольным данным."""
        return DiscCoset(
            reduce_mod_one(lam0),
            (int(lam1[0]) % self.N, int(lam1[1]) % self.N),
            (Fraction(lam2[0]) % 1, Fraction(lam2[1]) % 1),
        )

    def index(self, coset: DiscCoset) -> int:
        return self._index[coset]

    def zero(self) -> DiscCoset:
        return self.canonical((0,) * self.L0.rank)

    def negate(self, coset: DiscCoset) -> DiscCoset:
        return coset.negate(self.N)

    def cosets_with(self, lam1=None, lam12=None, lam11=None) -> List[DiscCoset]:
        """Отбор классов по условиям на λ₁."""
        out = []
        for c in self.cosets:
            if lam1 is not None and c.lam1 != tuple(lam1):
                continue
            if lam11 is not None and c.lam1[0] != lam11 % self.N:
                continue
            if lam12 is not None and c.lam1[1] != lam12 % self.N:
                continue
            out.append(c)
        return out

    def exponent_scale(self) -> int:
        """Общий знаменатель показателей q₁: lcm(24, 2N², уровень L₀)."""
        return lcm(24, 2 * self.N * self.N, self.L0.level)

    def __repr__(self) -> str:
        return f"WittLattice(L0={self.L0!r}, N={self.N})"


def lattice_from_spec(spec: Dict[str, Any]) -> WittLattice:
    """
    Строит решётку по описанию из конфигурации.

    Args:
        spec: {"L0_gram": [[...]], "N": 1} или {"builtin": "E8^3", "N": 1}.
    """
    if 'builtin' in spec:
        name = spec['builtin']
        if name not in BUILTIN_GRAMS:
            raise LatticeError(f"Неизвестная встроенная решётка: {name}")
        gram = BUILTIN_GRAMS[name]()
    elif 'L0_gram' in spec:
        gram = spec['L0_gram']
    else:
        raise LatticeError("Описание решётки должно содержать L0_gram или builtin")
    N = spec.get('N', 1)
    if isinstance(N, bool) or not isinstance(N, int):
        raise LatticeError(f"N должно быть целым: {N!r}")
    return WittLattice(PosDefLattice(gram), N)
