"""
Векторнозначная почти голоморфная форма F и её проверка.
"""

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from lattice import DiscCoset, WittLattice

logger = logging.getLogger(__name__)

class CoefficientRangeError(ValueError):
    """Запрошены коэффициенты за пределом, до которого известна форма."""


CoefficientTable = Dict[DiscCoset, Dict[Fraction, Fraction]]
Generator = Callable[[Fraction], CoefficientTable]


class VectorValuedForm:
    """
    Форма F = Σ_λ Σ_m c_λ(m) qᵐ e_λ с конечной главной частью.

    Коэффициенты вычисляются генератором по запросу и кэшируются;
    при запросе за пределами кэша таблица перестраивается до большего порядка.
    """

    def __init__(
        self,
        weight: Union[int, Fraction],
        lattice: WittLattice,
        generator: Generator,
        name: str = 'F',
        max_order: Optional[Fraction] = None,
    ):
        """
        Args:
            weight: Заявленный вес формы.
            lattice: Решётка, по классам которой индексированы компоненты.
            generator: Функция order -> таблица коэффициентов с m < order.
            name: Имя для журналов и отчётов.
            max_order: Предел генератора (для форм из файла); None — без предела.
        """
        self.weight = Fraction(weight)
        self.lattice = lattice
        self.name = name
        self._generator = generator
        self._max_order = max_order
        self._table: CoefficientTable = {}
        self._order = Fraction(0)
        self._built = False
        self._lock = threading.Lock()

    def _ensure(self, order: Fraction) -> None:
        if self._built and order <= self._order:
            return
        with self._lock:
            if self._built and order <= self._order:
                return
            target = max(Fraction(order), 2 * self._order, Fraction(1))
            if self._max_order is not None:
                if order > self._max_order:
                    raise CoefficientRangeError(
                        f"Коэффициенты формы {self.name} известны только для m < {self._max_order}, запрошено {order}"
                    )
                target = min(target, self._max_order)
            logger.debug(f"Форма {self.name}: генерация коэффициентов до порядка {target}")
            table = self._generator(target)
            self._table = {c: {m: v for m, v in row.items() if v} for c, row in table.items()}
            self._order = target
            self._built = True

    def coefficient(self, coset: DiscCoset, m: Union[int, Fraction]) -> Fraction:
        m = Fraction(m)
        if not self._built or m >= self._order:
            need = max(m + 1, Fraction(1))
            if self._max_order is not None and m < self._max_order:
                need = self._max_order
            self._ensure(need)
        return self._table.get(coset, {}).get(m, Fraction(0))

    def coefficients(self, coset: DiscCoset, order: Union[int, Fraction]) -> Dict[Fraction, Fraction]:
        """Все ненулевые c_λ(m) с m < order."""
        order = Fraction(order)
        self._ensure(order)
        return {m: c for m, c in sorted(self._table.get(coset, {}).items()) if m < order}

    def support(self, order: Union[int, Fraction]) -> Iterator[Tuple[DiscCoset, Fraction, Fraction]]:
        order = Fraction(order)
        self._ensure(order)
        for coset in self.lattice.cosets:
            for m, c in self.coefficients(coset, order).items():
                yield coset, m, c

    @property
    def principal_part(self) -> List[Tuple[DiscCoset, Fraction, Fraction]]:
        return list(self.support(0))

    @property
    def m_max(self) -> Fraction:
        """Наибольшее −m с ненулевым коэффициентом главной части (0, если её нет)."""
        return max((-m for _, m, _ in self.principal_part), default=Fraction(0))

    def constant_term(self, coset: Optional[DiscCoset] = None) -> Fraction:
        return self.coefficient(coset or self.lattice.zero(), 0)

    def __repr__(self) -> str:
        return f"VectorValuedForm({self.name}, weight={self.weight})"


@dataclass
class FormDiagnostics:
    """Результат проверки формы: список нарушений (проверка, место, сообщение)."""

    issues: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, check: str, location: str, message: str) -> None:
        self.issues.append((check, location, message))

    def describe(self) -> str:
        if self.ok:
            return "форма корректна"
        return "; ".join(f"[{c}] {loc}: {msg}" for c, loc, msg in self.issues)


class FormValidationError(ValueError):
    """Форма не прошла проверку; вычисления с ней запрещены."""

    def __init__(self, diagnostics: FormDiagnostics):
        super().__init__(diagnostics.describe())
        self.diagnostics = diagnostics


def validate_form(F: VectorValuedForm, L: WittLattice, check_order: Union[int, Fraction] = 2) -> FormDiagnostics:
    """
    Проверяет вес 1 − n/2, целочисленность c(m) при m ≤ 0, условие m + Q(λ) ∈ ℤ
    и симметрию c_λ = c_{−λ} для m < check_order.

    Args:
        F: Проверяемая форма.
        L: Решётка.
        check_order: Граница по m для проверок целочисленности и симметрии.

    Returns:
        Диагностика с местами нарушений.
    """
    diag = FormDiagnostics()
    if F.weight != L.weight:
        diag.add('weight', F.name, f"вес {F.weight}, ожидается 1 − n/2 = {L.weight}")
    if F.lattice.L0.rows != L.L0.rows or F.lattice.N != L.N:
        diag.add('lattice', F.name, "форма построена для другой решётки")
        return diag
    try:
        limit = Fraction(check_order)
        if F._max_order is not None:
            limit = min(limit, F._max_order)
        entries = list(F.support(limit))
    except ValueError as e:
        diag.add('coefficients', F.name, str(e))
        return diag
    for coset, m, c in entries:
        location = f"λ={coset.label()}, m={m}"
        if m <= 0 and c.denominator != 1:
            diag.add('integrality', location, f"коэффициент {c} не целый")
        if ((m + L.Q(coset)) % 1) != 0:
            diag.add('congruence', location, f"m + Q(λ) = {m + L.Q(coset)} ∉ ℤ")
        partner = L.negate(coset)
        other = F.coefficient(partner, m)
        if other != c:
            diag.add('symmetry', location, f"c_λ(m) = {c}, но c_(−λ)(m) = {other}")
    if diag.ok:
        logger.info(f"Форма {F.name} прошла проверку")
    else:
        logger.warning(f"Форма {F.name} не прошла проверку: {diag.describe()}")
    return diag


def require_valid(F: VectorValuedForm, L: WittLattice) -> None:
    diag = validate_form(F, L)
    if not diag.ok:
        raise FormValidationError(diag)
