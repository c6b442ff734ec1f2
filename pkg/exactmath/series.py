"""
Разреженные усечённые ряды Лорана–Пюизё по q₁ с коэффициентами в групповой алгебре характеров.

Член ряда хранится как (e, k) -> c, где q₁-показатель равен e / scale,
а ключ характера k задаёт вектор v = k / key_den в координатах базиса L₀.
Ключу v соответствует характер X^v = e((v, w₀)).
"""

import logging
import math
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .cyclotomic import CycRational, ONE

logger = logging.getLogger(__name__)

CharKey = Tuple[int, ...]
Exponent = Union[Fraction, float]
Scalar = Union[int, Fraction, CycRational]

INFINITY = math.inf


class SeriesError(ValueError):
    """Некорректная операция над рядом."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _as_scalar(c: Scalar) -> CycRational:
    if isinstance(c, CycRational):
        return c
    return CycRational.rational(c)


def key_vector(key: CharKey, key_den: int) -> Tuple[Fraction, ...]:
    """Переводит целочисленный ключ в рациональный вектор."""
    return tuple(Fraction(k, key_den) for k in key)


def pair(gram: Sequence[Sequence[int]], x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """
    xᵀ G y для матрицы Грама, заданной строками.

    Args:
        gram: Строки матрицы Грама L₀.
        x: Первый вектор в координатах базиса.
        y: Второй вектор.

    Returns:
        Точное значение билинейной формы.
    """
    total = Fraction(0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = gram[i]
        total += xi * sum((row[j] * yj for j, yj in enumerate(y) if yj), Fraction(0))
    return total


class JacobiSeries:
    """
    Усечённый ряд Σ c(e, v) q₁^e X^v.

    Известны все члены с показателем e < trunc; trunc = INFINITY означает точный многочлен.
    Объекты неизменяемы: все операции возвращают новые ряды.
    """

    __slots__ = ('rank', 'scale', 'key_den', 'terms', 'trunc')

    def __init__(
        self,
        terms: Dict[Tuple[int, CharKey], CycRational],
        rank: int,
        scale: int = 1,
        key_den: int = 1,
        trunc: Exponent = INFINITY,
    ):
        """
        Args:
            terms: Словарь (числитель показателя, ключ) -> коэффициент.
            rank: Ранг группы характеров.
            scale: Знаменатель показателей q₁.
            key_den: Знаменатель координат ключей.
            trunc: Порядок усечения (не включительно).
        """
        if scale < 1 or key_den < 1:
            raise SeriesError(f"Знаменатели должны быть положительны: scale={scale}, key_den={key_den}")
        if trunc != INFINITY:
            trunc = Fraction(trunc)
        limit = trunc * scale if trunc != INFINITY else INFINITY
        clean: Dict[Tuple[int, CharKey], CycRational] = {}
        for (e, k), c in terms.items():
            if len(k) != rank:
                raise SeriesError(f"Ключ {k} не соответствует рангу {rank}")
            if e < limit and not c.is_zero():
                clean[(e, k)] = c
        self.rank = rank
        self.scale = scale
        self.key_den = key_den
        self.terms = clean
        self.trunc = trunc

    # --- конструкторы ---

    @classmethod
    def zero(cls, rank: int = 0, trunc: Exponent = INFINITY) -> 'JacobiSeries':
        return cls({}, rank, trunc=trunc)

    @classmethod
    def one(cls, rank: int = 0) -> 'JacobiSeries':
        return cls.monomial(0, (0,) * rank, ONE)

    @classmethod
    def monomial(
        cls,
        exponent: Union[int, Fraction],
        key: Sequence[Union[int, Fraction]] = (),
        coeff: Scalar = 1,
        trunc: Exponent = INFINITY,
    ) -> 'JacobiSeries':
        """Одночлен coeff · q₁^exponent · X^key с рациональными показателем и ключом."""
        return cls.build(len(key), [(exponent, key, coeff)], trunc=trunc)

    @classmethod
    def build(
        cls,
        rank: int,
        items: Iterable[Tuple[Union[int, Fraction], Sequence[Union[int, Fraction]], Scalar]],
        trunc: Exponent = INFINITY,
    ) -> 'JacobiSeries':
        """
        Собирает ряд из троек (показатель, вектор ключа, коэффициент) с рациональными данными.

        Знаменатели подбираются автоматически, одинаковые члены складываются.
        """
        items = [(Fraction(e), tuple(Fraction(x) for x in v), _as_scalar(c)) for e, v, c in items]
        scale, key_den = 1, 1
        for e, v, _ in items:
            if len(v) != rank:
                raise SeriesError(f"Вектор ключа {v} не соответствует рангу {rank}")
            scale = _lcm(scale, e.denominator)
            for x in v:
                key_den = _lcm(key_den, x.denominator)
        terms: Dict[Tuple[int, CharKey], CycRational] = {}
        for e, v, c in items:
            idx = (int(e * scale), tuple(int(x * key_den) for x in v))
            terms[idx] = terms[idx] + c if idx in terms else c
        return cls(terms, rank, scale, key_den, trunc)

    # --- доступ ---

    def __len__(self) -> int:
        return len(self.terms)

    def is_exact(self) -> bool:
        return self.trunc == INFINITY

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> Exponent:
        """Нижняя граница показателей: минимум по членам или trunc для пустого ряда."""
        if not self.terms:
            return self.trunc
        return Fraction(min(e for e, _ in self.terms), self.scale)

    def items(self) -> Iterator[Tuple[Fraction, Tuple[Fraction, ...], CycRational]]:
        """Члены в каноническом порядке: по показателю, затем по ключу."""
        for (e, k) in sorted(self.terms):
            yield Fraction(e, self.scale), key_vector(k, self.key_den), self.terms[(e, k)]

    def coefficient(self, exponent: Union[int, Fraction], key: Sequence[Union[int, Fraction]] = ()) -> CycRational:
        e = Fraction(exponent) * self.scale
        k = tuple(Fraction(x) * self.key_den for x in key)
        if e.denominator != 1 or any(x.denominator != 1 for x in k):
            return CycRational.rational(0)
        return self.terms.get((int(e), tuple(int(x) for x in k)), CycRational.rational(0))

    def exponent_slice(self, exponent: Union[int, Fraction]) -> Dict[Tuple[Fraction, ...], CycRational]:
        """Все характеры при данном показателе q₁."""
        target = Fraction(exponent)
        return {v: c for e, v, c in self.items() if e == target}

    # --- выравнивание знаменателей ---

    def rescale(self, scale: int, key_den: int) -> 'JacobiSeries':
        """
        Переводит ряд к более мелким знаменателям показателей и ключей.

        Args:
            scale: Новый знаменатель показателей q₁, кратный текущему.
            key_den: Новый знаменатель координат ключей, кратный текущему.

        Returns:
            Тот же ряд в новом масштабе.

        Raises:
            SeriesError: Новые знаменатели не кратны текущим.
        """
        if scale % self.scale or key_den % self.key_den:
            raise SeriesError(f"Нельзя перевести знаменатели ({self.scale}, {self.key_den}) в ({scale}, {key_den})")
        if scale == self.scale and key_den == self.key_den:
            return self
        fe, fk = scale // self.scale, key_den // self.key_den
        terms = {(e * fe, tuple(x * fk for x in k)): c for (e, k), c in self.terms.items()}
        return JacobiSeries(terms, self.rank, scale, key_den, self.trunc)

    def with_rank(self, rank: int) -> 'JacobiSeries':
        """Вкладывает ряд ранга 0 в групповую алгебру ранга rank."""
        if rank == self.rank:
            return self
        if self.rank != 0:
            raise SeriesError(f"Несовместимые ранги ключей: {self.rank} и {rank}")
        zero = (0,) * rank
        terms = {(e, zero): c for (e, _), c in self.terms.items()}
        return JacobiSeries(terms, rank, self.scale, 1, self.trunc)

    def _align(self, other: 'JacobiSeries') -> Tuple['JacobiSeries', 'JacobiSeries']:
        rank = max(self.rank, other.rank)
        a, b = self.with_rank(rank), other.with_rank(rank)
        scale, key_den = _lcm(a.scale, b.scale), _lcm(a.key_den, b.key_den)
        return a.rescale(scale, key_den), b.rescale(scale, key_den)

    # --- арифметика ---

    def __add__(self, other: 'JacobiSeries') -> 'JacobiSeries':
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for idx, c in b.terms.items():
            terms[idx] = terms[idx] + c if idx in terms else c
        return JacobiSeries(terms, a.rank, a.scale, a.key_den, min(a.trunc, b.trunc))

    def __neg__(self) -> 'JacobiSeries':
        return self.scalar_mul(-1)

    def __sub__(self, other: 'JacobiSeries') -> 'JacobiSeries':
        return self + (-other)

    def scalar_mul(self, c: Scalar) -> 'JacobiSeries':
        c = _as_scalar(c)
        if c.is_zero():
            return JacobiSeries({}, self.rank, self.scale, self.key_den, self.trunc)
        terms = {idx: v * c for idx, v in self.terms.items()}
        return JacobiSeries(terms, self.rank, self.scale, self.key_den, self.trunc)

    def __mul__(self, other):
        """
        Произведение рядов или умножение на скаляр.

        Args:
            other: JacobiSeries, целое, Fraction или CycRational.

        Returns:
            Ряд, усечённый по min(Ta + vb, Tb + va), где v — младший показатель.
        """
        if isinstance(other, (int, Fraction, CycRational)):
            return self.scalar_mul(other)
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        a, b = self._align(other)
        trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
        limit = trunc * a.scale if trunc != INFINITY else INFINITY
        right = sorted(b.terms.items(), key=lambda kv: kv[0][0])
        terms: Dict[Tuple[int, CharKey], CycRational] = {}
        for (e1, k1), c1 in a.terms.items():
            for (e2, k2), c2 in right:
                e = e1 + e2
                if e >= limit:
                    break
                idx = (e, tuple(x + y for x, y in zip(k1, k2)))
                p = c1 * c2
                terms[idx] = terms[idx] + p if idx in terms else p
        return JacobiSeries(terms, a.rank, a.scale, a.key_den, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'JacobiSeries':
        if not isinstance(n, int):
            raise SeriesError(f"Показатель степени должен быть целым: {n}")
        if n < 0:
            if self.is_exact():
                raise SeriesError("Отрицательная степень точного ряда требует явного порядка (invert)")
            return self.invert(self.trunc - 2 * self.min_exp) ** (-n)
        result = JacobiSeries.one(self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, order: Exponent) -> 'JacobiSeries':
        return JacobiSeries(self.terms, self.rank, self.scale, self.key_den, min(self.trunc, order))

    def shift(self, exponent: Union[int, Fraction], key: Sequence[Union[int, Fraction]] = (), coeff: Scalar = 1) -> 'JacobiSeries':
        """Умножение на одночлен coeff · q₁^exponent · X^key."""
        key = tuple(key) if key else (0,) * self.rank
        return self * JacobiSeries.monomial(exponent, key, coeff)

    def invert(self, order: Exponent) -> 'JacobiSeries':
        """
        Обратный ряд до порядка order.

        Младший член должен быть единичным скаляром при нулевом ключе.

        Args:
            order: Требуемый порядок усечения результата.

        Returns:
            Ряд r с self · r = 1 через порядок min(order, trunc - 2·min_exp).
        """
        if order == INFINITY:
            raise SeriesError("Для обращения нужен конечный порядок")
        if not self.terms:
            raise SeriesError("Обращение нулевого ряда")
        low = min(e for e, _ in self.terms)
        leading = [(k, c) for (e, k), c in self.terms.items() if e == low]
        zero = (0,) * self.rank
        if len(leading) != 1 or leading[0][0] != zero:
            raise SeriesError("Младший член ряда необратим: он не является скаляром при нулевом ключе")
        v = Fraction(low, self.scale)
        lead_inv = leading[0][1].inverse()
        target = min(Fraction(order), self.trunc - 2 * v)
        normalized = self.shift(-v, zero, lead_inv)
        h = normalized - JacobiSeries.one(self.rank)
        window = target + v
        h = h.truncate(window)
        total = JacobiSeries.one(self.rank).truncate(window)
        term = JacobiSeries.one(self.rank)
        neg_h = -h
        while True:
            term = (term * neg_h).truncate(window)
            if term.is_zero():
                break
            total = total + term
        return total.shift(-v, zero, lead_inv).truncate(target)

    # --- подстановки ---

    def map_keys(self, image: Sequence[Sequence[Fraction]], rank: int) -> 'JacobiSeries':
        """
        Линейная замена характеров: базисный ключ i переходит в вектор image[i].

        Для ранга 1 это подстановка z = (u, w₀) в ряд по e(s·z).
        """
        image = [tuple(Fraction(x) for x in row) for row in image]
        if len(image) != self.rank or any(len(row) != rank for row in image):
            raise SeriesError("Размерность образа ключей не согласована с рангом")
        key_den = self.key_den
        for row in image:
            for x in row:
                key_den = _lcm(key_den, self.key_den * x.denominator)
        terms: Dict[Tuple[int, CharKey], CycRational] = {}
        for (e, k), c in self.terms.items():
            vec = [Fraction(0)] * rank
            for ki, row in zip(k, image):
                if ki:
                    for j, x in enumerate(row):
                        vec[j] += Fraction(ki, self.key_den) * x
            idx = (e, tuple(int(x * key_den) for x in vec))
            terms[idx] = terms[idx] + c if idx in terms else c
        return JacobiSeries(terms, rank, self.scale, key_den, self.trunc)

    def negate_keys(self) -> 'JacobiSeries':
        terms = {(e, tuple(-x for x in k)): c for (e, k), c in self.terms.items()}
        return JacobiSeries(terms, self.rank, self.scale, self.key_den, self.trunc)

    # --- сравнение ---

    def __eq__(self, other) -> bool:
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        if self.trunc != other.trunc:
            return False
        a, b = self._align(other)
        return a.terms == b.terms

    __hash__ = None

    def __repr__(self) -> str:
        shown = ", ".join(f"{c}·q^{e}·X^{list(map(str, v))}" for e, v, c in list(self.items())[:6])
        more = " ..." if len(self.terms) > 6 else ""
        return f"JacobiSeries([{shown}{more}], trunc={self.trunc})"


def series_arith(a: JacobiSeries, b: Optional[JacobiSeries], op: str, exponent: int = 0) -> JacobiSeries:
    """
    Единая точка входа для кольцевых операций.

    Args:
        a: Первый операнд.
        b: Второй операнд (для add и mul).
        op: Одна из операций 'add', 'mul', 'neg', 'int_pow'.
        exponent: Показатель для 'int_pow'.
    """
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'neg':
        return -a
    if op == 'int_pow':
        return a ** exponent
    raise SeriesError(f"Неизвестная операция: {op}")


def series_invert(s: JacobiSeries, order: Exponent) -> JacobiSeries:
    return s.invert(order)


def substitute_w0_translation(
    s: JacobiSeries,
    gram: Sequence[Sequence[int]],
    b1: Sequence[int],
    b2: Sequence[int],
    order: Optional[Exponent] = None,
) -> JacobiSeries:
    """
    Подстановка w₀ ↦ w₀ + b1·τ₁ + b2.

    Член q₁^e X^v переходит в q₁^(e + (v,b1)) · e((v,b2)) · X^v.

    Args:
        s: Исходный ряд.
        gram: Матрица Грама L₀.
        b1: Целочисленный вектор сдвига при τ₁.
        b2: Целочисленный вектор сдвига.
        order: Порядок усечения результата; обязателен для усечённого ряда при b1 ≠ 0.

    Returns:
        Ряд после подстановки.
    """
    if len(b1) != s.rank or len(b2) != s.rank:
        raise SeriesError("Векторы сдвига должны иметь длину, равную рангу")
    b1 = tuple(Fraction(x) for x in b1)
    b2 = tuple(Fraction(x) for x in b2)
    moves = any(b1)
    if moves and not s.is_exact() and order is None:
        raise SeriesError("Сдвиг по τ₁ усечённого ряда требует явного порядка результата")
    trunc = s.trunc if not moves else (order if order is not None else INFINITY)
    if order is not None and not moves:
        trunc = min(trunc, order)
    items = []
    for e, v, c in s.items():
        shift = pair(gram, v, b1)
        phase = pair(gram, v, b2)
        if phase.denominator != 1:
            c = c * CycRational.root_of_unity(phase)
        items.append((e + shift, v, c))
    if not items:
        return JacobiSeries({}, s.rank, s.scale, s.key_den, trunc)
    result = JacobiSeries.build(s.rank, items, trunc=trunc)
    return result
