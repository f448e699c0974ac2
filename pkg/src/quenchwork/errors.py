"""Exception hierarchy shared by all quenchwork modules."""


class QuenchworkError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuenchworkError, ValueError):
    """Input outside the physical or mathematical domain of an operation."""


class PrecisionError(QuenchworkError, ArithmeticError):
    """Working precision (or a truncation budget) was insufficient."""


class TruncationError(PrecisionError):
    """A truncation cap was exceeded before the requested tolerance was met."""


class CrossCheckError(QuenchworkError):
    """Two independent computation routes disagreed beyond tolerance."""
