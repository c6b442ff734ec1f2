"""
Результат сравнения двух сторон тождества.
"""

from dataclasses import dataclass
from typing import Optional, Union

from exactmath import Difference, GradedFJSeries, JacobiSeries, first_difference, series_difference
from exactmath.series import Exponent

from .errors import ConsistencyError


@dataclass
class IdentityCheck:
    name: str
    window: Exponent
    difference: Optional[Difference]

    @property
    def holds(self) -> bool:
        return self.difference is None

    def describe(self) -> str:
        if self.holds:
            return f"{self.name}: выполнено до порядка {self.window}"
        return f"{self.name}: нарушено ({self.difference.describe()})"

    def require(self) -> 'IdentityCheck':
        if not self.holds:
            raise ConsistencyError(self.describe())
        return self


def compare(
    name: str,
    lhs: Union[JacobiSeries, GradedFJSeries],
    rhs: Union[JacobiSeries, GradedFJSeries],
    order: Optional[Exponent] = None,
) -> IdentityCheck:
    """
    Сравнивает стороны в общем окне; с order окно дополнительно ограничивается
    и должно его покрывать.
    """
    if isinstance(lhs, GradedFJSeries):
        if order is not None:
            lhs, rhs = lhs.truncate_q1(order), rhs.truncate_q1(order)
        window = min(min(g.trunc for g in lhs.grades), min(g.trunc for g in rhs.grades))
        diff = first_difference(lhs, rhs)
    else:
        if order is not None:
            lhs, rhs = lhs.truncate(order), rhs.truncate(order)
        window = min(lhs.trunc, rhs.trunc)
        diff = series_difference(lhs, rhs)
    if order is not None and window < order:
        raise ConsistencyError(f"{name}: окно {window} меньше запрошенного порядка {order}")
    return IdentityCheck(name, window, diff)
