"""Exception types shared across the package."""


class FreeMeixnerError(Exception):
    """Base class for all library errors."""


class DomainError(FreeMeixnerError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class EnumerationCapError(FreeMeixnerError, ValueError):
    """A partition enumeration was requested above the configured size cap."""


class OrderCapError(FreeMeixnerError, ValueError):
    """A sequence operation was requested beyond the supported truncation order."""


class NumericError(FreeMeixnerError, ArithmeticError):
    """A floating-point routine failed to converge or lost validity.

    ``best_estimate`` carries the last value computed before giving up,
    when one exists.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
