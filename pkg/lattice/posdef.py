"""
Положительно определённая чётная решётка L₀ и её дискриминантная группа.
"""

import logging
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


class LatticeError(ValueError):
    """Некорректные данные решётки."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class PosDefLattice:
    """
    Чётная положительно определённая решётка, заданная матрицей Грама.

    Векторы записываются в координатах базиса решётки; Q(x) = ½ xᵀGx.
    """

    def __init__(self, gram: Sequence[Sequence[int]]):
        """
        Args:
            gram: Симметричная целочисленная матрица с чётной диагональю.
        """
        rows = [list(r) for r in gram]
        rank = len(rows)
        if any(len(r) != rank for r in rows):
            raise LatticeError(f"Матрица Грама должна быть квадратной, получены строки длины {[len(r) for r in rows]}")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if isinstance(x, bool) or int(x) != x:
                    raise LatticeError(f"Элемент Грама ({i}, {j}) не целый: {x}")
        self.gram = np.array([[int(x) for x in r] for r in rows], dtype=object).reshape(rank, rank)
        self.rank = rank
        if not np.array_equal(self.gram, self.gram.T):
            raise LatticeError("Матрица Грама несимметрична")
        odd = [i for i in range(rank) if self.gram[i, i] % 2]
        if odd:
            raise LatticeError(f"Нечётная диагональ Грама в позициях {odd}: решётка не чётная")
        pivots = [d for d, _ in self._ldl]
        bad = [i for i, d in enumerate(pivots) if d <= 0]
        if bad:
            raise LatticeError(f"Матрица Грама не положительно определена (ведущий элемент {bad[0]})")
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in r) for r in rows)

    # --- квадратичная форма ---

    def pair(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """
        xᵀGy точно.

        Raises:
            LatticeError: Длина вектора не совпадает с рангом.
        """
        if len(x) != self.rank or len(y) != self.rank:
            raise LatticeError(f"Ожидались векторы длины {self.rank}, получены {len(x)} и {len(y)}")
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                total += Fraction(xi) * sum((self.gram[i, j] * Fraction(yj) for j, yj in enumerate(y) if yj), Fraction(0))
        return total

    def Q(self, x: Sequence[Fraction]) -> Fraction:
        return self.pair(x, x) / 2

    def gram_image(self, x: Sequence[Fraction]) -> Vector:
        """Вектор Gx (координаты x в двойственном базисе)."""
        return tuple(sum((self.gram[i, j] * Fraction(xj) for j, xj in enumerate(x)), Fraction(0)) for i in range(self.rank))

    # --- разложение и инварианты ---

    @cached_property
    def _ldl(self) -> List[Tuple[Fraction, List[Fraction]]]:
        """
        Разложение Q(x) = Σ d_i (x_i + Σ_{j>i} μ_ij x_j)² в точной арифметике.

        Returns:
            Список (d_i, [μ_i,i+1, ..., μ_i,n-1]).
        """
        n = self.rank
        a = [[Fraction(int(self.gram[i, j]), 2) for j in range(n)] for i in range(n)]
        result = []
        for i in range(n):
            d = a[i][i]
            if d <= 0:
                result.append((d, []))
                return result + [(Fraction(0), [])] * (n - i - 1)
            mu = [a[i][j] / d for j in range(i + 1, n)]
            for j in range(i + 1, n):
                for k in range(i + 1, n):
                    a[j][k] -= a[i][j] * a[i][k] / d
            result.append((d, mu))
        return result

    @cached_property
    def det(self) -> int:
        if self.rank == 0:
            return 1
        return int(Matrix(self.rows).det())

    @cached_property
    def inverse(self) -> Tuple[Vector, ...]:
        if self.rank == 0:
            return ()
        inv = Matrix(self.rows).inv()
        return tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def invariant_factors(self) -> Tuple[int, ...]:
        """Инвариантные множители L₀^∨/L₀ (нормальная форма Смита)."""
        if self.rank == 0:
            return ()
        snf = smith_normal_form(Matrix(self.rows), domain=ZZ)
        return tuple(abs(int(snf[i, i])) for i in range(self.rank))

    @cached_property
    def exponent(self) -> int:
        """Экспонента D группы L₀^∨/L₀."""
        d = 1
        for f in self.invariant_factors:
            d = _lcm(d, f)
        return d

    @cached_property
    def level(self) -> int:
        """Наименьшее l, при котором l·Q(λ) ∈ ℤ для всех λ ∈ L₀^∨."""
        lvl = 1
        for coset, q in discriminant_cosets(self):
            lvl = _lcm(lvl, q.denominator)
            for other, _ in discriminant_cosets(self):
                lvl = _lcm(lvl, self.pair(coset, other).denominator)
        return lvl

    def is_unimodular(self) -> bool:
        return self.det == 1

    def __repr__(self) -> str:
        return f"PosDefLattice(rank={self.rank}, det={self.det})"


def reduce_mod_one(v: Sequence[Fraction]) -> Vector:
    return tuple(Fraction(x) % 1 for x in v)


def discriminant_cosets(L0: PosDefLattice) -> List[Tuple[Vector, Fraction]]:
    """
    Представители L₀^∨/L₀ в фундаментальном кубе [0,1)^n и значения Q по модулю 1.

    Группа порождается столбцами G⁻¹; замыкание строится обходом в ширину.
    """
    cached = getattr(L0, '_cosets', None)
    if cached is not None:
        return cached
    if L0.rank == 0:
        result = [((), Fraction(0))]
    else:
        if L0.det == 0:
            raise LatticeError("Вырожденная матрица Грама")
        gens = [reduce_mod_one([L0.inverse[i][j] for i in range(L0.rank)]) for j in range(L0.rank)]
        zero = tuple(Fraction(0) for _ in range(L0.rank))
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = reduce_mod_one([a + b for a, b in zip(v, g)])
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        if len(seen) != L0.det:
            raise LatticeError(f"Найдено {len(seen)} смежных классов вместо det = {L0.det}")
        result = [(v, L0.Q(v) % 1) for v in sorted(seen)]
    L0._cosets = result
    logger.debug(f"Дискриминантная группа: {len(result)} классов")
    return result


def gram_pair(L0: PosDefLattice, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return L0.pair(x, y)


def block_diagonal(*blocks: Sequence[Sequence[int]]) -> List[List[int]]:
    """Матрица Грама ортогональной суммы решёток."""
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[offset + i][offset + j] = x
        offset += len(b)
    return out


def e8_gram() -> List[List[int]]:
    """Матрица Картана E₈ (нумерация Бурбаки)."""
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


BUILTIN_GRAMS = {
    'rank0': lambda: [],
    'A1': lambda: [[2]],
    'E8': e8_gram,
    'E8^3': lambda: block_diagonal(e8_gram(), e8_gram(), e8_gram()),
}
