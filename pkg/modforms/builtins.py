"""
Встроенные входные формы и загрузка коэффициентов из файла.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd

from exactmath import JacobiSeries
from lattice import LatticeError, WittLattice

from .jacobi import phi01_coefficients
from .qseries import classical_series, eta_power
from .vvform import CoefficientTable, VectorValuedForm

logger = logging.getLogger(__name__)


def _scalar_table(L: WittLattice, series: JacobiSeries) -> CoefficientTable:
    return {L.zero(): {e: c.to_fraction() for e, _, c in series.items()}}


def _require_scalar_lattice(L: WittLattice, name: str) -> None:
    if L.N != 1 or not L.L0.is_unimodular():
        raise LatticeError(f"Скалярная форма {name} требует унимодулярную L₀ и N = 1")


def j744_form(L: WittLattice, shift: int = 0, weight: Optional[Fraction] = None) -> VectorValuedForm:
    """j − 744 + shift как форма веса 0 (по умолчанию) над унимодулярной решёткой."""
    _require_scalar_lattice(L, 'j744')

    def generate(order: Fraction) -> CoefficientTable:
        series = classical_series('j744', order)
        if shift:
            series = series + JacobiSeries.monomial(0, (), shift)
        return _scalar_table(L, series)

    name = 'j744' if not shift else f'j744{shift:+d}'
    return VectorValuedForm(0 if weight is None else weight, L, generate, name=name)


def eta_power_form(L: WittLattice, k: int, weight: Optional[Fraction] = None) -> VectorValuedForm:
    """η^k как скалярная форма веса k/2."""
    _require_scalar_lattice(L, 'eta_power')

    def generate(order: Fraction) -> CoefficientTable:
        return _scalar_table(L, eta_power(k, order))

    return VectorValuedForm(Fraction(k, 2) if weight is None else weight, L, generate, name=f'eta^{k}')


def e8_over_delta_form(L: WittLattice, weight: Optional[Fraction] = None) -> VectorValuedForm:
    """E₄²/Δ веса −4."""
    _require_scalar_lattice(L, 'e8_over_delta')

    def generate(order: Fraction) -> CoefficientTable:
        e4 = classical_series('E4', order + 1)
        inv_delta = eta_power(24, order + 2).invert(order)
        return _scalar_table(L, (e4 * e4 * inv_delta).truncate(order))

    return VectorValuedForm(-4 if weight is None else weight, L, generate, name='E8/Delta')


def phi01_components(L: WittLattice, weight: Optional[Fraction] = None) -> VectorValuedForm:
    """
    Компоненты (F₀, F₁) формы φ₀,₁ над ⟨2⟩ веса −½.

    Args:
        L: Решётка с L₀ = ⟨2⟩ и N = 1.
    """
    if L.N != 1 or L.L0.rows != ((2,),):
        raise LatticeError("Форма gn_phi01 определена над L₀ = ⟨2⟩ при N = 1")
    zero = L.canonical((0,))
    half = L.canonical((Fraction(1, 2),))

    def generate(order: Fraction) -> CoefficientTable:
        table = phi01_coefficients(order)
        return {zero: table[0], half: table[1]}

    return VectorValuedForm(Fraction(-1, 2) if weight is None else weight, L, generate, name='phi01')


def form_from_file(L: WittLattice, path: Path, weight: Fraction, order: Optional[Fraction] = None) -> VectorValuedForm:
    """
    Загружает коэффициенты из CSV с колонками coset, m, c.

    coset — номер класса в L.cosets, m и c — рациональные числа вида "num/den".
    Файл должен содержать все ненулевые коэффициенты с m < order; по умолчанию
    order — следующая за наибольшим указанным m точка решётки показателей.
    """
    if not path.exists():
        raise FileNotFoundError(f"Файл коэффициентов не найден: {path}")
    df = pd.read_csv(path, dtype=str, comment='#', skipinitialspace=True)
    missing = {'coset', 'm', 'c'} - set(df.columns)
    if missing:
        raise ValueError(f"В файле {path} нет колонок {sorted(missing)}")
    table: CoefficientTable = {c: {} for c in L.cosets}
    for row_no, row in df.iterrows():
        idx = int(row['coset'])
        if not 0 <= idx < len(L.cosets):
            raise ValueError(f"{path}, строка {row_no + 2}: номер класса {idx} вне диапазона")
        m = Fraction(row['m'].replace('−', '-'))
        table[L.cosets[idx]][m] = table[L.cosets[idx]].get(m, Fraction(0)) + Fraction(row['c'].replace('−', '-'))
    logger.info(f"Загружено {len(df)} коэффициентов из {path}")
    top = max((m for row in table.values() for m in row), default=Fraction(0))
    limit = order if order is not None else top + Fraction(1, L.exponent_scale())

    def generate(requested: Fraction) -> CoefficientTable:
        return {c: {m: v for m, v in row.items() if m < requested} for c, row in table.items()}

    return VectorValuedForm(weight, L, generate, name=path.stem, max_order=limit)


def form_from_spec(spec: Dict[str, Any], L: WittLattice, base_dir: Optional[Path] = None) -> VectorValuedForm:
    """
    Строит форму по описанию из конфигурации.

    Args:
        spec: {"builtin": ...} или {"coefficients_file": path, "weight": "num/den"}.
        L: Решётка.
        base_dir: Каталог конфигурации для относительных путей.
    """
    weight = Fraction(str(spec['weight']).replace('−', '-')) if 'weight' in spec else None
    if 'coefficients_file' in spec:
        path = Path(spec['coefficients_file'])
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        order = Fraction(str(spec['order'])) if 'order' in spec else None
        return form_from_file(L, path, L.weight if weight is None else weight, order)
    name = spec.get('builtin')
    if name == 'j744':
        return j744_form(L, int(spec.get('shift', 0)), weight)
    if name == 'eta_power':
        return eta_power_form(L, int(spec['k']), weight)
    if name == 'gn_phi01':
        return phi01_components(L, weight)
    if name == 'e8_over_delta':
        return e8_over_delta_form(L, weight)
    raise ValueError(f"Неизвестное описание формы: {spec}")
