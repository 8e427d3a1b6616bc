"""
oracle/exceptions.py
"""

from exactnum.exceptions import ConjForgeError


class OracleBudgetExceeded(ConjForgeError, MemoryError):
    """The ball outgrew the configured memory budget."""

    def __init__(self, message: str, partial_count: int) -> None:
        super().__init__(message)
        self.partial_count = partial_count


class OracleOutOfRange(ConjForgeError):
    """The element was not reached within the search radius."""

    def __init__(self, message: str, radius: int) -> None:
        super().__init__(message)
        self.radius = radius
