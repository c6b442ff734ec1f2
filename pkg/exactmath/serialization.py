"""
Каноническая JSON-сериализация точных рядов.

Рациональные числа записываются строками "num/den" (целые — без знаменателя),
ключи — массивами целых чисел, скаляры — объектами {order, coeffs}.
"""

import json
from fractions import Fraction
from typing import Any, Dict, Union

from .cyclotomic import CycRational
from .graded import GradedFJSeries
from .series import INFINITY, JacobiSeries


def format_rational(x: Union[int, Fraction, float]) -> str:
    if x == INFINITY:
        return "inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: Union[str, int]) -> Union[Fraction, float]:
    if isinstance(text, int):
        return Fraction(text)
    text = str(text).strip().replace("−", "-")
    if text == "inf":
        return INFINITY
    return Fraction(text)


def cyc_to_json(c: CycRational) -> Dict[str, Any]:
    return {
        "order": c.order,
        "coeffs": {str(j): format_rational(v) for j, v in enumerate(c.coeffs) if v},
    }


def cyc_from_json(data: Dict[str, Any]) -> CycRational:
    powers = {int(j): parse_rational(v) for j, v in data["coeffs"].items()}
    return CycRational.from_powers(int(data["order"]), powers)


def series_to_json(s: JacobiSeries) -> Dict[str, Any]:
    return {
        "rank": s.rank,
        "scale": s.scale,
        "key_den": s.key_den,
        "trunc": format_rational(s.trunc),
        "terms": [
            {"q1": format_rational(Fraction(e, s.scale)), "key": list(k), "coeff": cyc_to_json(s.terms[(e, k)])}
            for (e, k) in sorted(s.terms)
        ],
    }


def series_from_json(data: Dict[str, Any]) -> JacobiSeries:
    scale = int(data["scale"])
    terms = {}
    for term in data["terms"]:
        e = parse_rational(term["q1"]) * scale
        terms[(int(e), tuple(int(k) for k in term["key"]))] = cyc_from_json(term["coeff"])
    return JacobiSeries(terms, int(data["rank"]), scale, int(data["key_den"]), parse_rational(data["trunc"]))


def graded_to_json(g: GradedFJSeries) -> Dict[str, Any]:
    return {"offset": format_rational(g.offset), "grades": [series_to_json(s) for s in g.grades]}


def graded_from_json(data: Dict[str, Any]) -> GradedFJSeries:
    return GradedFJSeries(parse_rational(data["offset"]), [series_from_json(s) for s in data["grades"]])


def dumps(data: Any) -> str:
    """Детерминированный вывод: сортировка ключей и фиксированные отступы."""
    return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2)
