from __future__ import annotations

from typing import Any


class CircPeakError(Exception):
    """Base class for every error raised by circpeak."""


class DomainError(CircPeakError, ValueError):
    """Raised when an operation is called outside its mathematical domain."""

    def __init__(
        self,
        *args: Any,
        operation: str | None = None,
        message: str = "Arguments are outside the domain of this operation.",
        **kwargs: Any,
    ):
        self.operation = operation
        if operation:
            message = f"{operation}: {message}"
        super().__init__(message, *args, **kwargs)


class PreconditionViolation(CircPeakError, ValueError):
    """Raised when an input value is malformed (not a permutation, duplicate positions, ...)."""

    def __init__(
        self,
        *args: Any,
        value: Any | None = None,
        message: str = "Input value violates a precondition.",
        **kwargs: Any,
    ):
        self.value = value
        super().__init__(message, *args, **kwargs)


class ParseError(PreconditionViolation):
    """Raised when a permutation or set spec cannot be parsed."""


class ScaleLimitExceeded(CircPeakError):
    """Raised when a requested order is above the configured limit of a counting route."""

    def __init__(
        self,
        *args: Any,
        route: str,
        n: int,
        limit: int,
        message: str | None = None,
        **kwargs: Any,
    ):
        self.route = route
        self.n = n
        self.limit = limit
        message = message or f"{route} scale exceeded: n={n} is above the limit {limit}."
        super().__init__(message, *args, **kwargs)


class IntegralityError(CircPeakError, ArithmeticError):
    """Raised when an exact rational evaluation that must be a nonnegative integer is not."""

    def __init__(
        self,
        *args: Any,
        value: Any | None = None,
        message: str = "Expected a nonnegative integer.",
        **kwargs: Any,
    ):
        self.value = value
        super().__init__(f"{message} Got {value}.", *args, **kwargs)


class RouteMismatch(CircPeakError):
    """Raised when two or more counting routes disagree on the same cell."""

    def __init__(
        self,
        *args: Any,
        values: dict[str, int] | None = None,
        message: str = "Counting routes disagree.",
        **kwargs: Any,
    ):
        self.values = values or {}
        detail = ", ".join(f"{route}={value}" for route, value in self.values.items())
        super().__init__(f"{message} {detail}".strip(), *args, **kwargs)


class NotApplicable(DomainError):
    """Raised when a counting route has no formula for the requested set."""
