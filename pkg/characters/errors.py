"""Exception hierarchy shared by every engine of the toolkit.

The CLI maps these onto exit codes: ``ValidationError`` -> 2,
``DomainError`` -> 3.
"""

from typing import Optional


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(ToolkitError, ValueError):
    """An input value is malformed or inconsistent.

    Attributes:
        field: Name of the offending field, when one can be named.
    """

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class DomainError(ToolkitError, ValueError):
    """A well-formed input lies outside an operation's domain."""


class UnsupportedFieldError(DomainError):
    """The operation is not defined over the requested local field."""


class PreconditionError(DomainError):
    """A documented precondition of a spectral operation does not hold."""


class GridError(ValidationError):
    """A crosscheck grid is malformed or unbounded."""
