"""Exceptions raised by the library layer."""


class QformError(Exception):
    """Base class for all library errors."""


class ValidationError(QformError, ValueError):
    """Input violates a documented precondition."""


class InvariantError(QformError, AssertionError):
    """A mathematical invariant failed; results computed so far are unreliable."""


class SearchBudgetError(InvariantError):
    """A bounded search exhausted its budget without finding a witness."""
