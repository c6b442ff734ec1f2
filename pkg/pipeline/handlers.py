"""
Звенья цепочки проверок: по одному на тождество.
"""

import logging
from fractions import Fraction

from borcherds import (
    Chamber0,
    check_fj_polynomials,
    check_local_product,
    check_translate_law,
    check_translation_covariance,
    choose_chamber,
    compare,
    compute_I0,
    fj_expansion,
    grade1_sign,
    product_expansion,
    vector_system_check,
)
from modforms import FormValidationError, jacobi_theta1, jacobi_theta1_product, validate_form
from weyl import compare_with_fj

from .base_handler import BaseHandler, CheckContext

logger = logging.getLogger(__name__)

DEFAULT_ETAS = [(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2)), (Fraction(1, 3), Fraction(1, 4))]
DEFAULT_SHIFTS = [(0, 1), (1, 0), (1, 1), (2, -1)]
# Ψ₀ над L₀ большого ранга содержит знаменатель Вейля с огромным числом членов
MAX_EXPANSION_RANK = 4


def _skip_large(context: CheckContext, name: str) -> bool:
    limit = context.params.get('max_rank', MAX_EXPANSION_RANK)
    rank = context.lattice.L0.rank
    if rank > limit:
        context.add(name, None, f"ранг L₀ = {rank} больше max_rank = {limit}")
        return True
    return False


def _chamber(context: CheckContext) -> Chamber0:
    if context.chamber is None:
        context.chamber = choose_chamber(context.form, context.lattice, context.params.get('witness'))
    return context.chamber


class ValidateFormHandler(BaseHandler):
    """Проверка формы; некорректная форма прерывает цепочку."""

    name = "форма"

    def process(self, context: CheckContext) -> None:
        diagnostics = validate_form(context.form, context.lattice)
        if not diagnostics.ok:
            raise FormValidationError(diagnostics)
        context.add(self.name, True)


class ZeroOrbitHandler(BaseHandler):
    name = "I₀"

    def process(self, context: CheckContext) -> None:
        first = compute_I0(context.form, context.lattice, 'sigma_sum')
        second = compute_I0(context.form, context.lattice, 'e2_ct')
        context.add("I₀: sigma_sum = e2_ct", first == second, f"sigma_sum = {first}, e2_ct = {second}")
        context.add("24·I₀ ∈ ℤ", (24 * first).denominator == 1, f"I₀ = {first}")


class VectorSystemHandler(BaseHandler):
    name = "векторная система"

    def process(self, context: CheckContext) -> None:
        report = vector_system_check(context.form, context.lattice)
        detail = "" if report.equal else f"разность:\n{report.difference}"
        context.add(self.name, report.equal, detail)


class ExpansionRoutesHandler(BaseHandler):
    """Разложение через Θ_{a,n} против прямого произведения."""

    name = "два пути разложения"

    def process(self, context: CheckContext) -> None:
        if _skip_large(context, self.name):
            return
        chamber = _chamber(context)
        context.fj = fj_expansion(context.form, context.lattice, context.K, context.order, chamber)
        direct = product_expansion(context.form, context.lattice, context.K, context.order, chamber)
        context.add("Ψ₀ ≠ 0", not context.fj.psi[0].is_zero())
        context.add_identity(compare(self.name, context.fj.psi, direct.psi, context.order))


class RelationsHandler(BaseHandler):
    name = "соотношения Ψ_k/Ψ₀"

    def process(self, context: CheckContext) -> None:
        if context.fj is None or context.K < 1:
            context.add(self.name, None, "нет степеней q₂ выше нулевой")
            return
        for check in check_fj_polynomials(context.fj):
            context.add_identity(check)
        sign = grade1_sign(context.fj)
        context.add("Ψ₁ = −Θ₁,₁·Ψ₀", sign == -1, f"знак {sign}")


class CovarianceHandler(BaseHandler):
    """Ковариантность Θ_{a,n} при сдвигах w₀ на b₁ (из [params] или базисные векторы L₀)."""

    name = "ковариантность Θ_{a,n}"

    def process(self, context: CheckContext) -> None:
        if _skip_large(context, self.name):
            return
        L = context.lattice
        rank = L.L0.rank
        if rank == 0:
            context.add(self.name, None, "L₀ нулевого ранга")
            return
        if 'b1' in context.params:
            shifts = [tuple(int(x) for x in context.params['b1'])]
        else:
            shifts = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(min(rank, 2))]
        pairs = [(1, 1)] + ([(1, 2), (2, 1)] if context.K >= 2 else [])
        for b1 in shifts:
            for a, n in pairs:
                check = check_translation_covariance(context.form, L, a, n, b1, b1, context.theta_order)
                context.add_identity(check)


class ThetaFormsHandler(BaseHandler):
    """ϑ₁: сумма против произведения и закон сдвига Θ₁[η]."""

    name = "ϑ₁"

    def process(self, context: CheckContext) -> None:
        order = context.theta_order
        context.add_identity(compare("ϑ₁: сумма = произведение", jacobi_theta1(order), jacobi_theta1_product(order), order))
        for eta1, eta2 in context.params.get('etas', DEFAULT_ETAS):
            for a, b in DEFAULT_SHIFTS:
                context.add_identity(check_translate_law(Fraction(eta1), Fraction(eta2), a, b, order))


class LocalProductHandler(BaseHandler):
    name = "локальное произведение"

    def process(self, context: CheckContext) -> None:
        params = context.params
        order = context.theta_order
        if 'x0' in params:
            samples = [(params['x0'], params.get('lam21', 0), params.get('lam22', 0))]
        else:
            samples = [
                (root.vector, coset.lam2[0], coset.lam2[1])
                for root in _chamber(context).positive_roots[:3]
                for coset, _ in root.cosets
            ]
        if not samples:
            context.add(self.name, None, "нет корней и не задан x₀")
            return
        for x0, lam21, lam22 in samples:
            context.add_identity(check_local_product(x0, lam21, lam22, order))


class WeylComparisonHandler(BaseHandler):
    """Сравнение с классическим произведением Борчердса (только N = 1, унимодулярная L₀)."""

    name = "произведение Борчердса"

    def process(self, context: CheckContext) -> None:
        L = context.lattice
        if L.N != 1 or not L.L0.is_unimodular():
            context.add(self.name, None, "решётка не унимодулярна или N > 1")
            return
        if not context.form.principal_part:
            context.add(self.name, None, "пустая главная часть")
            return
        if _skip_large(context, self.name):
            return
        result = compare_with_fj(context.form, L, context.K, context.order, _chamber(context))
        context.add_identity(result.check)
        context.add_identity(result.split_check)
        context.add("|u| = 1", result.unit.has_unit_modulus(), f"u = {result.unit}")
