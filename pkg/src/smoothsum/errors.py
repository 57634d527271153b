"""Exception hierarchy shared by the library and the CLI."""


class SmoothSumError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SmoothSumError, ValueError):
    """An argument lies outside the domain of the operation."""


class TruncationError(SmoothSumError, ArithmeticError):
    """A coefficient beyond the known truncation order was requested."""


class ParseError(SmoothSumError, ValueError):
    """Malformed generating-function expression.

    ``offset`` is the byte offset (UTF-8) of the offending token.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnsupportedDenominatorError(DomainError):
    """Denominator has roots other than x = 1 and x = -1."""


class ConsistencyError(SmoothSumError, AssertionError):
    """Two independent computations that must agree did not."""
