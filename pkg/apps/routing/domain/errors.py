"""Domain-specific exceptions for the Routing context.

This module contains the domain-level exceptions raised while building,
validating or transforming pickup-and-delivery instances and routes.
"""

from typing import Any, Optional


class RoutingDomainError(Exception):
    """Base exception for all routing domain errors."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        """Initialize the domain error.

        Args:
            message: Human-readable error message.
            details: Optional dictionary with additional error details.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidArgumentError(RoutingDomainError):
    """Raised when an operation receives an argument outside its domain.

    Examples are a non-positive request count or a reinsertion mask
    requested for a route that still contains the removed pair.
    """

    def __init__(self, argument: str, reason: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Invalid argument '{argument}': {reason}"
        super().__init__(message, details)
        self.argument = argument
        self.reason = reason


class InvalidRouteError(RoutingDomainError):
    """Raised when a node sequence is not a valid tour representation."""

    def __init__(self, reason: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Invalid route: {reason}"
        super().__init__(message, details)
        self.reason = reason


class ConstraintViolationError(RoutingDomainError):
    """Raised when a route breaks the precedence or stack-loading rule.

    ``position`` is the index in the route of the first offending delivery,
    when one is known.
    """

    def __init__(
        self,
        variant: str,
        reason: str,
        position: Optional[int] = None,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        where = f" at position {position}" if position is not None else ""
        message = f"{variant} constraint violated{where}: {reason}"
        super().__init__(message, details)
        self.variant = variant
        self.reason = reason
        self.position = position


class SizeLimitError(RoutingDomainError):
    """Raised when an exhaustive procedure is asked for a too large instance."""

    def __init__(self, operation: str, size: int, limit: int, details: Optional[dict[str, Any]] = None) -> None:
        message = f"{operation} supports at most {limit} requests, got {size}"
        super().__init__(message, details)
        self.operation = operation
        self.size = size
        self.limit = limit


class InstanceParseError(RoutingDomainError):
    """Raised when an instance file cannot be parsed."""

    def __init__(
        self,
        path: str,
        line_number: int,
        reason: str,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        message = f"{path}:{line_number}: {reason}"
        super().__init__(message, details)
        self.path = path
        self.line_number = line_number
        self.reason = reason


class InstanceFormatError(RoutingDomainError):
    """Raised when an instance file parses but its content is inconsistent.

    Duplicate node ids and incomplete pairings end up here.
    """

    def __init__(self, path: str, reason: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"{path}: {reason}"
        super().__init__(message, details)
        self.path = path
        self.reason = reason


class DatasetNotFoundError(RoutingDomainError):
    """Raised when a dataset directory or its manifest is missing."""

    def __init__(self, path: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Dataset not found: {path}"
        super().__init__(message, details)
        self.path = path
