"""
Точная арифметика в круговых полях Q(ζ_M).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Tuple, Union

import sympy
from sympy import Matrix, Poly, cyclotomic_poly, totient

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_X = sympy.Symbol('x')

# (d, строки, обратная подматрица, матрица вложения)
_Embedding = Tuple[int, Tuple[int, ...], Tuple[Tuple[Fraction, ...], ...], Tuple[Tuple[int, ...], ...]]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _cyclotomic_tail(order: int) -> Tuple[int, ...]:
    """
    Коэффициенты Φ_M без старшего члена, от младших степеней к старшим.

    ζ^φ(M) = -Σ tail[k] ζ^k.
    """
    coeffs = Poly(cyclotomic_poly(order, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs[1:]))


@lru_cache(maxsize=None)
def _degree(order: int) -> int:
    return int(totient(order))


def _reduce(order: int, poly: Dict[int, Fraction]) -> Tuple[Fraction, ...]:
    """Приводит многочлен от ζ_M по модулю Φ_M к базису 1, ζ, ..., ζ^(φ-1)."""
    deg = _degree(order)
    work = [Fraction(0)] * max(deg, max(poly, default=0) + 1)
    for j, c in poly.items():
        work[j] += c
    tail = _cyclotomic_tail(order)
    for top in range(len(work) - 1, deg - 1, -1):
        c = work[top]
        if c == 0:
            continue
        work[top] = Fraction(0)
        shift = top - deg
        for k, t in enumerate(tail):
            if t:
                work[shift + k] -= c * t
    return tuple(work[:deg])


@lru_cache(maxsize=None)
def _subfield_maps(order: int) -> Tuple[_Embedding, ...]:
    """
    Вложения Q(ζ_d) ⊂ Q(ζ_M) для делителей 2 < d < M, d ≢ 2 (mod 4), по возрастанию d.

    Для каждого d: строки rows, на которых матрица вложения A обратима,
    обратная к этой подматрице и сама A (φ(M) × φ(d)).
    """
    maps = []
    for d in range(3, order):
        if order % d or d % 4 == 2:
            continue
        step = order // d
        columns = [_reduce(order, {j * step: Fraction(1)}) for j in range(_degree(d))]
        lift = Matrix([[sympy.Rational(col[r].numerator, col[r].denominator) for col in columns]
                       for r in range(_degree(order))])
        _, pivots = lift.T.rref()
        inverse = lift.extract(list(pivots), list(range(_degree(d)))).inv()
        maps.append((
            d,
            tuple(pivots),
            tuple(tuple(Fraction(int(x.p), int(x.q)) for x in inverse.row(i)) for i in range(_degree(d))),
            tuple(tuple(int(x) for x in lift.row(r)) for r in range(_degree(order))),
        ))
    return tuple(maps)


@lru_cache(maxsize=1 << 16)
def _minimal_field(order: int, coeffs: Tuple[Fraction, ...]) -> Tuple[int, Tuple[Fraction, ...]]:
    """Переписывает значение в наименьшем Q(ζ_d), d | M, которое его содержит."""
    for d, rows, inverse, lift in _subfield_maps(order):
        picked = [coeffs[r] for r in rows]
        y = tuple(sum((a * b for a, b in zip(row, picked)), Fraction(0)) for row in inverse)
        if all(sum((a * b for a, b in zip(row, y) if a), Fraction(0)) == c for row, c in zip(lift, coeffs)):
            return d, y
    return order, coeffs


class CycRational:
    """
    Элемент кругового поля Q(ζ_M) в каноническом виде.

    Хранится как вектор коэффициентов по базису 1, ζ_M, ..., ζ_M^(φ(M)-1).
    Порядок M приводится к наименьшему делителю, в поле которого лежит значение
    (для рациональных значений M = 1), поэтому равные значения хранятся одинаково.
    """

    __slots__ = ('order', 'coeffs')

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if order < 1:
            raise ValueError(f"Порядок корня из единицы должен быть положителен: {order}")
        if len(coeffs) != _degree(order):
            raise ValueError(
                f"Ожидалось {_degree(order)} коэффициентов для порядка {order}, получено {len(coeffs)}"
            )
        if order > 1 and not any(coeffs[1:]):
            order, coeffs = 1, coeffs[:1]
        elif order > 4:
            order, coeffs = _minimal_field(order, coeffs)
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def rational(cls, value: Rational) -> 'CycRational':
        return cls(1, (Fraction(value),))

    @classmethod
    def from_powers(cls, order: int, powers: Dict[int, Rational]) -> 'CycRational':
        """Строит Σ c_j ζ_M^j для произвольных j (по модулю M)."""
        poly: Dict[int, Fraction] = {}
        for j, c in powers.items():
            j %= order
            poly[j] = poly.get(j, Fraction(0)) + Fraction(c)
        return cls(order, _reduce(order, poly))

    @classmethod
    def root_of_unity(cls, r: Rational) -> 'CycRational':
        """Возвращает e(r) = exp(2πi r) для рационального r."""
        r = Fraction(r) % 1
        return cls.from_powers(r.denominator, {r.numerator: 1})

    # --- структура ---

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"Значение не рационально: {self}")
        return self.coeffs[0]

    def lift(self, order: int) -> 'CycRational':
        """Переписывает значение в Q(ζ_order); order должен делиться на self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Порядок {order} не кратен {self.order}")
        step = order // self.order
        poly = {j * step: c for j, c in enumerate(self.coeffs) if c}
        return _Raw(order, _reduce(order, poly))

    def _aligned(self, other: 'CycRational') -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        if self.order == other.order:
            return self.order, self.coeffs, other.coeffs
        order = _lcm(self.order, other.order)
        return order, self.lift(order).coeffs, other.lift(order).coeffs

    # --- арифметика ---

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.order == 1 and other.order == 1:
            return CycRational.rational(self.coeffs[0] + other.coeffs[0])
        order, a, b = self._aligned(other)
        return CycRational(order, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CycRational(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.order == 1:
            c = other.coeffs[0]
            if self.order == 1:
                return CycRational.rational(self.coeffs[0] * c)
            return CycRational(self.order, (x * c for x in self.coeffs))
        if self.order == 1:
            return other * self
        order, a, b = self._aligned(other)
        poly: Dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    poly[i + j] = poly.get(i + j, Fraction(0)) + x * y
        return CycRational(order, _reduce(order, poly))

    __rmul__ = __mul__

    def inverse(self) -> 'CycRational':
        if self.is_zero():
            raise ZeroDivisionError("Обращение нуля в круговом поле")
        if self.order == 1:
            return CycRational.rational(1 / self.coeffs[0])
        # Решаем self * y = 1 через матрицу умножения в базисе степеней ζ.
        deg = _degree(self.order)
        columns = []
        for k in range(deg):
            col = (self * CycRational.from_powers(self.order, {k: 1})).lift(self.order).coeffs
            columns.append([sympy.Rational(c.numerator, c.denominator) for c in col])
        mult = Matrix(columns).T
        rhs = Matrix([1] + [0] * (deg - 1))
        sol = mult.LUsolve(rhs)
        return CycRational(self.order, (Fraction(int(s.p), int(s.q)) for s in sol))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> 'CycRational':
        if n < 0:
            return self.inverse() ** (-n)
        result, base = CycRational.rational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> 'CycRational':
        """Комплексное сопряжение: ζ ↦ ζ^(-1)."""
        return CycRational.from_powers(self.order, {-j: c for j, c in enumerate(self.coeffs) if c})

    def has_unit_modulus(self) -> bool:
        return self * self.conjugate() == 1

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        _, a, b = self._aligned(other)
        return a == b

    __hash__ = None

    def __repr__(self):
        if self.order == 1:
            return f"CycRational({self.coeffs[0]})"
        parts = [f"{c}*z{self.order}^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"CycRational({' + '.join(parts)})"


class _Raw(CycRational):
    """Промежуточное значение без нормализации порядка (нужно при выравнивании)."""

    __slots__ = ()

    def __init__(self, order: int, coeffs: Tuple[Fraction, ...]):
        self.order = order
        self.coeffs = coeffs


def _coerce(value):
    if isinstance(value, CycRational):
        return value
    if isinstance(value, (int, Fraction)):
        return CycRational.rational(value)
    return NotImplemented


ZERO = CycRational.rational(0)
ONE = CycRational.rational(1)
I = CycRational.root_of_unity(Fraction(1, 4))
