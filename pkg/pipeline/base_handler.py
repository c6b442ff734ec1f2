"""
Звено цепочки проверок тождеств.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from borcherds import Chamber0, ConsistencyError, FJResult, IdentityCheck
from lattice import WittLattice
from modforms import CoefficientRangeError, VectorValuedForm

logger = logging.getLogger(__name__)


@dataclass
class CheckVerdict:
    name: str
    passed: Optional[bool]
    detail: str = ""

    @property
    def status(self) -> str:
        if self.passed is None:
            return "skip"
        return "pass" if self.passed else "fail"


@dataclass
class CheckContext:
    """
    Общие данные цепочки: форма, решётка, окно и накопленные вердикты.

    Промежуточные результаты (камера, разложение) кешируются между звеньями.
    """

    form: VectorValuedForm
    lattice: WittLattice
    K: int
    order: Fraction
    theta_order: Fraction
    params: Dict[str, Any] = field(default_factory=dict)
    verdicts: List[CheckVerdict] = field(default_factory=list)
    chamber: Optional[Chamber0] = None
    fj: Optional[FJResult] = None

    def add(self, name: str, passed: Optional[bool], detail: str = "") -> None:
        verdict = CheckVerdict(name, passed, detail)
        self.verdicts.append(verdict)
        if passed is False:
            logger.error(f"Проверка {name} не пройдена: {detail}")
        elif passed is None:
            logger.warning(f"Проверка {name} пропущена: {detail}")
        else:
            logger.info(f"Проверка {name} пройдена")

    def add_identity(self, check: IdentityCheck) -> None:
        self.add(check.name, check.holds, check.describe())

    @property
    def ok(self) -> bool:
        return all(v.passed is not False for v in self.verdicts)


class BaseHandler(ABC):
    """
    Звено цепочки: выполняет свою проверку и передаёт контекст дальше.

    Нарушение внутреннего тождества фиксируется как проваленный вердикт,
    нехватка коэффициентов формы из файла как пропуск,
    остальные исключения прерывают цепочку.
    """

    name = "check"

    def __init__(self, next_handler: Optional['BaseHandler'] = None):
        self._next_handler = next_handler

    def set_next(self, handler: 'BaseHandler') -> 'BaseHandler':
        """
        Args:
            handler: Следующее звено.

        Returns:
            То же звено для построения цепочки.
        """
        self._next_handler = handler
        return handler

    def handle(self, context: CheckContext) -> CheckContext:
        try:
            self.process(context)
        except ConsistencyError as e:
            context.add(self.name, False, str(e))
        except CoefficientRangeError as e:
            context.add(self.name, None, str(e))
        if self._next_handler:
            return self._next_handler.handle(context)
        return context

    @abstractmethod
    def process(self, context: CheckContext) -> None:
        """Выполняет проверку и записывает вердикты в контекст."""
