"""
Вывод результатов: канонический JSON и выровненный текст.
"""

from fractions import Fraction
from typing import Any, Dict, List

from borcherds import Chamber0, FJResult
from exactmath import CycRational, GradedFJSeries, JacobiSeries, cyc_to_json, format_rational, graded_to_json
from exactmath.serialization import series_to_json


def format_cyc(c: CycRational) -> str:
    """Рациональное число как "n/d", иначе сумма по степеням ζ_M."""
    if c.is_rational():
        return format_rational(c.to_fraction())
    parts = [f"{format_rational(v)}·ζ{c.order}^{j}" for j, v in enumerate(c.coeffs) if v]
    return "(" + " + ".join(parts) + ")"


def _key(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def series_lines(s: JacobiSeries, indent: str = "  ") -> List[str]:
    """Строки по возрастанию показателя q₁; внутри — характеры в лексикографическом порядке ключей."""
    lines = []
    current = None
    for e, v, c in s.items():
        if e != current:
            lines.append(f"{indent}q₁^{format_rational(e)}:")
            current = e
        lines.append(f"{indent}  X^{_key(v)}  {format_cyc(c)}")
    lines.append(f"{indent}O(q₁^{format_rational(s.trunc)})")
    return lines


def graded_lines(g: GradedFJSeries) -> List[str]:
    lines = []
    for k, s in enumerate(g.grades):
        lines.append(f"q₂^{format_rational(g.offset + k)}:")
        lines.extend(series_lines(s))
    return lines


def chamber_json(chamber: Chamber0) -> Dict[str, Any]:
    return {
        "witness": [format_rational(x) for x in chamber.witness],
        "roots": len(chamber.roots),
        "positive_roots": [[format_rational(x) for x in r.vector] for r in chamber.positive_roots],
    }


def fj_result_json(result: FJResult) -> Dict[str, Any]:
    return {
        "I0": format_rational(result.I0),
        "phase": cyc_to_json(result.phase),
        "order": format_rational(result.order),
        "chamber": chamber_json(result.chamber),
        "psi": graded_to_json(result.psi),
    }


def fj_result_text(result: FJResult) -> str:
    head = [
        f"I₀ = {format_rational(result.I0)}",
        f"фаза = {format_cyc(result.phase)}",
        f"положительных корней: {len(result.chamber.positive_roots)}",
    ]
    return "\n".join(head + graded_lines(result.psi))


def series_json(s: JacobiSeries, **extra: Any) -> Dict[str, Any]:
    data = {"series": series_to_json(s)}
    data.update(extra)
    return data


def series_text(s: JacobiSeries, title: str) -> str:
    return "\n".join([title] + series_lines(s))


def scalar_text(values: Dict[str, Fraction]) -> str:
    width = max(len(k) for k in values)
    return "\n".join(f"{k.ljust(width)}  {format_rational(v)}" for k, v in values.items())
