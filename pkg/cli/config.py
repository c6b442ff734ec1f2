"""
Загрузка задания: решётка, форма, окно усечения и параметры команд.
"""

import json
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

from exactmath import parse_rational
from lattice import LatticeError, WittLattice, lattice_from_spec
from modforms import VectorValuedForm, form_from_spec

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Ошибка в задании с указанием места."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass
class JobConfig:
    lattice: WittLattice
    form: VectorValuedForm
    K: int
    q1_order: Fraction
    theta_order: Fraction
    params: Dict[str, Any] = field(default_factory=dict)
    source: Optional[Path] = None


def _read_document(path: Path) -> Dict[str, Any]:
    suffix = path.suffix.lower()
    try:
        if suffix == '.toml':
            with open(path, 'rb') as f:
                return tomllib.load(f)
        if suffix == '.json':
            with open(path, encoding='utf-8') as f:
                return json.load(f)
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise ConfigError(str(path), f"не удалось разобрать файл: {e}") from e
    raise ConfigError(str(path), f"неизвестный формат {suffix!r}, ожидается .toml или .json")


def _rational(value: Any, location: str) -> Fraction:
    try:
        result = parse_rational(value if isinstance(value, int) else str(value))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(location, f"ожидалось рациональное число \"num/den\", получено {value!r}") from e
    if not isinstance(result, Fraction):
        raise ConfigError(location, f"ожидалось конечное число, получено {value!r}")
    return result


def _vector(value: Any, location: str):
    if not isinstance(value, list):
        raise ConfigError(location, f"ожидался список, получено {value!r}")
    return tuple(_rational(x, f"{location}[{i}]") for i, x in enumerate(value))


def _params(raw: Dict[str, Any]) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for name in ('a', 'n', 'max_rank'):
        if name in raw:
            value = raw[name]
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"[params].{name}", f"ожидалось положительное целое, получено {value!r}")
            params[name] = value
    for name in ('x0', 'witness', 'b1'):
        if name in raw:
            params[name] = _vector(raw[name], f"[params].{name}")
    if any(x.denominator != 1 for x in params.get('b1', ())):
        raise ConfigError("[params].b1", f"ожидался целочисленный вектор, получено {raw['b1']!r}")
    for name in ('lam21', 'lam22'):
        if name in raw:
            params[name] = _rational(raw[name], f"[params].{name}")
    if 'etas' in raw:
        params['etas'] = [_vector(e, f"[params].etas[{i}]") for i, e in enumerate(raw['etas'])]
    return params


def load_config(path: Path, grades: Optional[int] = None, q1_order: Optional[str] = None) -> JobConfig:
    """
    Читает задание из TOML или JSON.

    Args:
        path: Путь к файлу задания.
        grades: Значение K из командной строки (приоритетнее файла).
        q1_order: Порядок по q₁ из командной строки.

    Raises:
        FileNotFoundError: Файла нет.
        ConfigError: Ошибка в содержимом.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Файл задания не найден: {path}")
    doc = _read_document(path)
    for section in ('lattice', 'form'):
        if not isinstance(doc.get(section), dict):
            raise ConfigError(f"[{section}]", "раздел отсутствует")

    lattice = lattice_from_spec(doc['lattice'])
    try:
        form = form_from_spec(doc['form'], lattice, base_dir=path.parent)
    except KeyError as e:
        raise ConfigError("[form]", f"нет поля {e}") from e
    except LatticeError:
        raise
    except ValueError as e:
        raise ConfigError("[form]", str(e)) from e

    truncation = doc.get('truncation', {})
    K = grades if grades is not None else truncation.get('K', 2)
    if isinstance(K, bool) or not isinstance(K, int) or K < 0:
        raise ConfigError("[truncation].K", f"ожидалось неотрицательное целое, получено {K!r}")
    order = _rational(q1_order if q1_order is not None else truncation.get('q1_order', 3), "[truncation].q1_order")
    theta_order = _rational(truncation.get('theta_order', order), "[truncation].theta_order")
    for name, value in (('q1_order', order), ('theta_order', theta_order)):
        if value <= 0:
            raise ConfigError(f"[truncation].{name}", f"порядок должен быть положительным: {value}")

    params = _params(doc.get('params', {}))
    for name in ('x0', 'witness', 'b1'):
        if name in params and len(params[name]) != lattice.L0.rank:
            raise ConfigError(f"[params].{name}", f"ожидался вектор длины {lattice.L0.rank}, получено {len(params[name])}")
    logger.info(f"Задание {path.name}: {lattice!r}, форма {form.name}, K = {K}, порядок {order}")
    return JobConfig(lattice, form, K, order, theta_order, params, path)
