"""
Ошибки вычисления произведений Борчердса.
"""


class ConsistencyError(RuntimeError):
    """Нарушено внутреннее тождество или утверждение об окне усечения."""


class MeromorphicFactorError(ValueError):
    """Отрицательная кратность корня: Ψ₀ мероморфна вдоль стены и не раскладывается в ряд."""
