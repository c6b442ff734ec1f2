"""
Градуированные по q₂ ряды Фурье–Якоби и экспонента от них.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .cyclotomic import CycRational
from .series import INFINITY, Exponent, JacobiSeries, SeriesError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Difference:
    """Первое расхождение двух рядов."""

    grade: int
    exponent: Fraction
    key: Tuple[Fraction, ...]
    left: CycRational
    right: CycRational

    def describe(self) -> str:
        key = "(" + ", ".join(str(x) for x in self.key) + ")"
        return (
            f"степень q₂: {self.grade}, показатель q₁: {self.exponent}, ключ: {key}, "
            f"слева: {self.left}, справа: {self.right}"
        )


class GradedFJSeries:
    """
    Ряд Σ_k Ψ_k · q₂^(offset + k), k = 0..K.

    Args:
        offset: Показатель q₂ при нулевой степени.
        grades: Коэффициенты Ψ_k.
    """

    __slots__ = ('offset', 'grades')

    def __init__(self, offset: Union[int, Fraction], grades: Sequence[JacobiSeries]):
        if not grades:
            raise SeriesError("Градуированный ряд должен содержать хотя бы одну степень")
        self.offset = Fraction(offset)
        self.grades: List[JacobiSeries] = list(grades)

    @classmethod
    def constant(cls, series: JacobiSeries, K: int, offset: Union[int, Fraction] = 0) -> 'GradedFJSeries':
        """Ряд series · q₂^offset, продолженный нулями до степени K."""
        zero = JacobiSeries.zero(series.rank)
        return cls(offset, [series] + [zero] * K)

    @property
    def K(self) -> int:
        return len(self.grades) - 1

    @property
    def rank(self) -> int:
        return max(g.rank for g in self.grades)

    def __getitem__(self, k: int) -> JacobiSeries:
        return self.grades[k]

    def __add__(self, other: 'GradedFJSeries') -> 'GradedFJSeries':
        if self.offset != other.offset:
            raise SeriesError(f"Разные сдвиги по q₂: {self.offset} и {other.offset}")
        K = min(self.K, other.K)
        return GradedFJSeries(self.offset, [self.grades[k] + other.grades[k] for k in range(K + 1)])

    def __neg__(self) -> 'GradedFJSeries':
        return GradedFJSeries(self.offset, [-g for g in self.grades])

    def __sub__(self, other: 'GradedFJSeries') -> 'GradedFJSeries':
        return self + (-other)

    def __mul__(self, other):
        """
        Произведение градуированных рядов (сдвиги складываются, K = min) или умножение
        каждой степени на ряд или скаляр.

        Args:
            other: GradedFJSeries, JacobiSeries или скаляр.

        Returns:
            Новый GradedFJSeries.
        """
        if isinstance(other, GradedFJSeries):
            K = min(self.K, other.K)
            grades = []
            for k in range(K + 1):
                acc: Optional[JacobiSeries] = None
                for i in range(k + 1):
                    left, right = self.grades[i], other.grades[k - i]
                    if left.is_zero() and left.is_exact() or right.is_zero() and right.is_exact():
                        continue
                    term = left * right
                    acc = term if acc is None else acc + term
                grades.append(acc if acc is not None else JacobiSeries.zero(self.rank))
            return GradedFJSeries(self.offset + other.offset, grades)
        if isinstance(other, JacobiSeries):
            return GradedFJSeries(self.offset, [g * other for g in self.grades])
        return GradedFJSeries(self.offset, [g.scalar_mul(other) for g in self.grades])

    __rmul__ = __mul__

    def truncate_q1(self, order: Exponent) -> 'GradedFJSeries':
        return GradedFJSeries(self.offset, [g.truncate(order) for g in self.grades])

    def truncate_q2(self, K: int) -> 'GradedFJSeries':
        return GradedFJSeries(self.offset, self.grades[:K + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedFJSeries):
            return NotImplemented
        return self.offset == other.offset and self.grades == other.grades

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedFJSeries(offset={self.offset}, K={self.K})"


def series_exp_graded(s: GradedFJSeries) -> GradedFJSeries:
    """
    exp(s) по степеням q₂ для ряда с нулевой нулевой степенью.

    Использует рекурсию k·E_k = Σ_{j=1..k} j·S_j·E_{k-j}, вытекающую из E' = S'·E.
    """
    if s.offset != 0:
        raise SeriesError(f"Экспонента определена для рядов со сдвигом 0, получен {s.offset}")
    if not s.grades[0].is_zero():
        raise SeriesError("Нулевая степень аргумента экспоненты должна быть нулём")
    rank = s.rank
    out: List[JacobiSeries] = [JacobiSeries.one(rank)]
    for k in range(1, s.K + 1):
        acc: Optional[JacobiSeries] = None
        for j in range(1, k + 1):
            if s.grades[j].is_zero() and s.grades[j].is_exact():
                continue
            term = (s.grades[j] * out[k - j]).scalar_mul(j)
            acc = term if acc is None else acc + term
        out.append(acc.scalar_mul(Fraction(1, k)) if acc is not None else JacobiSeries.zero(rank))
    return GradedFJSeries(0, out)


def series_difference(a: JacobiSeries, b: JacobiSeries, grade: int = 0) -> Optional[Difference]:
    """Первое расхождение двух рядов в общем окне усечения или None."""
    window = min(a.trunc, b.trunc)
    left = a.truncate(window)
    right = b.truncate(window)
    rank = max(a.rank, b.rank)
    keys = set()
    for e, v, _ in left.items():
        keys.add((e, v))
    for e, v, _ in right.items():
        keys.add((e, v))
    for e, v in sorted(keys):
        lc = left.coefficient(e, v) if left.rank == rank else left.with_rank(rank).coefficient(e, v)
        rc = right.coefficient(e, v) if right.rank == rank else right.with_rank(rank).coefficient(e, v)
        if lc != rc:
            return Difference(grade, e, v, lc, rc)
    return None


def first_difference(a: GradedFJSeries, b: GradedFJSeries) -> Optional[Difference]:
    """
    Первое расхождение градуированных рядов по общим степеням и общему окну.

    Разные сдвиги по q₂ считаются расхождением в нулевой степени.
    """
    if a.offset != b.offset:
        return Difference(0, Fraction(0), (), CycRational.rational(a.offset), CycRational.rational(b.offset))
    for k in range(min(a.K, b.K) + 1):
        diff = series_difference(a.grades[k], b.grades[k], grade=k)
        if diff is not None:
            return diff
    return None
