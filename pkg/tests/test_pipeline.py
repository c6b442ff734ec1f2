import logging
from fractions import Fraction

import pytest

from modforms import FormValidationError, VectorValuedForm
from pipeline import CheckContext, CheckPipeline, first_failure, verdict_table


def _run(form, lattice, K, order, **params):
    context = CheckContext(form, lattice, K, Fraction(order), Fraction(order), params)
    return CheckPipeline().run(context)


def test_j744_suite_passes(rank0, j744):
    context = _run(j744, rank0, 2, 2)
    assert context.ok, first_failure(context)
    table = verdict_table(context)
    assert list(table.columns) == ['check', 'status', 'detail']
    assert set(table['status']) <= {'pass', 'skip'}
    assert 'skip' in set(table['status'])


def test_phi01_suite_passes(a1, phi01):
    context = _run(phi01, a1, 1, 2, witness=(Fraction(1),))
    assert context.ok, first_failure(context)
    statuses = dict(zip(verdict_table(context)['check'], verdict_table(context)['status']))
    assert statuses['произведение Борчердса'] == 'skip'
    assert statuses['векторная система'] == 'pass'


def test_invalid_form_stops_chain(rank0):
    zero = rank0.zero()
    form = VectorValuedForm(1, rank0, lambda order: {zero: {Fraction(-1): Fraction(1)}})
    with pytest.raises(FormValidationError):
        _run(form, rank0, 1, 2)


def test_failed_identity_is_recorded(a1, phi01):
    context = CheckContext(phi01, a1, 1, Fraction(2), Fraction(2))
    context.add("образец", False, "расхождение")
    assert not context.ok
    assert first_failure(context) == "образец: расхождение"


def test_large_rank_skips_expansion(rank0, j744):
    context = _run(j744, rank0, 1, 2, max_rank=-1)
    statuses = dict(zip(verdict_table(context)['check'], verdict_table(context)['status']))
    assert statuses['два пути разложения'] == 'skip'
    assert context.fj is None


def test_verdicts_are_logged(a1, phi01, caplog):
    context = CheckContext(phi01, a1, 1, Fraction(2), Fraction(2))
    with caplog.at_level(logging.INFO, logger="pipeline.base_handler"):
        context.add("окно", None, "нет коэффициентов")
        context.add("знак", True)
    assert "Проверка окно пропущена: нет коэффициентов" in caplog.messages
    assert "Проверка знак пройдена" in caplog.messages
