"""
Команды командной строки.
"""

import logging
from typing import Callable, Dict, Tuple

from borcherds import (
    choose_chamber,
    compute_I0,
    cross_checked_I0,
    fj_expansion,
    product_expansion,
    psi0,
    theta_an,
)
from exactmath import cyc_to_json, dumps, format_rational
from modforms import require_valid
from pipeline import CheckContext, CheckPipeline, first_failure, verdict_table
from weyl import compare_with_fj

from .config import JobConfig
from .render import (
    chamber_json,
    fj_result_json,
    fj_result_text,
    format_cyc,
    scalar_text,
    series_json,
    series_text,
)

logger = logging.getLogger(__name__)

Report = Tuple[int, object, str]


def _expand(config: JobConfig) -> Report:
    result = fj_expansion(config.form, config.lattice, config.K, config.q1_order, witness=config.params.get('witness'))
    return 0, fj_result_json(result), fj_result_text(result)


def _product(config: JobConfig) -> Report:
    result = product_expansion(config.form, config.lattice, config.K, config.q1_order, witness=config.params.get('witness'))
    return 0, fj_result_json(result), fj_result_text(result)


def _i0(config: JobConfig) -> Report:
    value = cross_checked_I0(config.form, config.lattice)
    routes = {
        'sigma_sum': compute_I0(config.form, config.lattice, 'sigma_sum'),
        'e2_ct': compute_I0(config.form, config.lattice, 'e2_ct'),
    }
    payload = {'I0': format_rational(value), 'routes': {k: format_rational(v) for k, v in routes.items()}}
    return 0, payload, scalar_text({'I0': value, **routes})


def _theta_an(config: JobConfig) -> Report:
    a, n = config.params.get('a', 1), config.params.get('n', 1)
    series = theta_an(config.form, config.lattice, a, n, config.theta_order)
    return 0, series_json(series, a=a, n=n), series_text(series, f"Θ_{a},{n}:")


def _psi0(config: JobConfig) -> Report:
    chamber = choose_chamber(config.form, config.lattice, config.params.get('witness'))
    result = psi0(config.form, config.lattice, chamber, config.q1_order)
    payload = series_json(
        result.series,
        phase=cyc_to_json(result.phase),
        eta_exponent=result.eta_exponent,
        chamber=chamber_json(chamber),
    )
    text = series_text(result.series, f"Ψ₀ (η^{result.eta_exponent}, фаза {format_cyc(result.phase)}):")
    return 0, payload, text


def _weyl(config: JobConfig) -> Report:
    chamber = choose_chamber(config.form, config.lattice, config.params.get('witness'))
    comparison = compare_with_fj(config.form, config.lattice, config.K, config.q1_order, chamber)
    weyl = comparison.weyl
    alpha, rho0, beta = weyl.rho00
    y2, y0, y1 = weyl.witness_y
    payload = {
        'm_max': format_rational(weyl.m_max),
        'B': format_rational(weyl.B),
        'witness_y': [format_rational(y2), [format_rational(x) for x in y0], format_rational(y1)],
        'rho00': {'e1': format_rational(alpha), 'x0': [format_rational(x) for x in rho0], 'e1_prime': format_rational(beta)},
        'unit': cyc_to_json(comparison.unit),
        'checks': {c.name: c.holds for c in (comparison.check, comparison.split_check)},
    }
    lines = [
        f"m_max = {format_rational(weyl.m_max)}, B = {format_rational(weyl.B)}",
        f"ρ₀₀ = {format_rational(alpha)}·e₁ + ({', '.join(format_rational(x) for x in rho0)}) + {format_rational(beta)}·e₁′",
        f"скаляр u = {format_cyc(comparison.unit)}",
        comparison.check.describe(),
        comparison.split_check.describe(),
    ]
    return (0 if comparison.holds else 1), payload, "\n".join(lines)


def _check(config: JobConfig) -> Report:
    context = CheckContext(
        config.form, config.lattice, config.K, config.q1_order, config.theta_order, dict(config.params)
    )
    CheckPipeline().run(context)
    table = verdict_table(context)
    payload = {
        'ok': context.ok,
        'checks': [{'check': v.name, 'status': v.status, 'detail': v.detail} for v in context.verdicts],
    }
    text = table.to_string(index=False)
    failure = first_failure(context)
    if failure:
        text += f"\n\nпервое расхождение: {failure}"
    return (0 if context.ok else 1), payload, text


COMMANDS: Dict[str, Callable[[JobConfig], Report]] = {
    'expand': _expand,
    'product': _product,
    'i0': _i0,
    'theta-an': _theta_an,
    'psi0': _psi0,
    'weyl': _weyl,
    'check': _check,
}


def run(command: str, config: JobConfig, output: str = 'json') -> Tuple[int, str]:
    """
    Выполняет команду над заданием.

    Args:
        command: Одна из команд COMMANDS.
        config: Загруженное задание.
        output: 'json' или 'text'.

    Returns:
        Код завершения и текст отчёта для stdout.
    """
    if command not in COMMANDS:
        raise ValueError(f"Неизвестная команда: {command}")
    if output not in ('json', 'text'):
        raise ValueError(f"Неизвестный формат вывода: {output}")
    if command != 'check':
        require_valid(config.form, config.lattice)
    code, payload, text = COMMANDS[command](config)
    logger.info(f"Команда {command} завершена с кодом {code}")
    return code, dumps(payload) if output == 'json' else text
