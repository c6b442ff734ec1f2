"""
Сборка цепочки проверок и сводная таблица вердиктов.
"""

import logging
from typing import List, Optional

import pandas as pd

from .base_handler import BaseHandler, CheckContext
from .handlers import (
    CovarianceHandler,
    ExpansionRoutesHandler,
    LocalProductHandler,
    RelationsHandler,
    ThetaFormsHandler,
    ValidateFormHandler,
    VectorSystemHandler,
    WeylComparisonHandler,
    ZeroOrbitHandler,
)

logger = logging.getLogger(__name__)


class CheckPipeline:
    """
    Полный набор проверок тождеств в виде цепочки ответственности.

    Args:
        include_weyl: Подключать сравнение с произведением Борчердса.
    """

    def __init__(self, include_weyl: bool = True):
        self.include_weyl = include_weyl
        self._build_pipeline()

    def _build_pipeline(self) -> None:
        handlers: List[BaseHandler] = [
            ValidateFormHandler(),
            ZeroOrbitHandler(),
            VectorSystemHandler(),
            ThetaFormsHandler(),
            LocalProductHandler(),
            ExpansionRoutesHandler(),
            RelationsHandler(),
            CovarianceHandler(),
        ]
        if self.include_weyl:
            handlers.append(WeylComparisonHandler())
        head = handlers[0]
        tail = head
        for handler in handlers[1:]:
            tail = tail.set_next(handler)
        self.pipeline = head

    def run(self, context: CheckContext) -> CheckContext:
        logger.info(f"Запуск проверок: K = {context.K}, порядок {context.order}")
        self.pipeline.handle(context)
        failed = sum(1 for v in context.verdicts if v.passed is False)
        logger.info(f"Проверки завершены: всего {len(context.verdicts)}, провалено {failed}")
        return context


def verdict_table(context: CheckContext) -> pd.DataFrame:
    """Вердикты в виде таблицы с колонками check, status, detail."""
    return pd.DataFrame(
        [{'check': v.name, 'status': v.status, 'detail': v.detail} for v in context.verdicts],
        columns=['check', 'status', 'detail'],
    )


def first_failure(context: CheckContext) -> Optional[str]:
    for v in context.verdicts:
        if v.passed is False:
            return f"{v.name}: {v.detail}"
    return None
