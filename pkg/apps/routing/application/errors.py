"""Application-level exceptions for the Routing context.

Domain errors are translated here so callers (management commands, the
neural search context) only handle ``ApplicationError`` subclasses.
"""

from typing import Any, Dict, Optional

from ..domain.errors import (
    ConstraintViolationError as DomainConstraintViolationError,
    DatasetNotFoundError as DomainDatasetNotFoundError,
    InstanceFormatError as DomainInstanceFormatError,
    InstanceParseError as DomainInstanceParseError,
    RoutingDomainError,
    SizeLimitError as DomainSizeLimitError,
)


class ApplicationError(Exception):
    """Base exception for all application-level errors."""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        """Initialize the application error.

        Args:
            message: Human-readable error message.
            details: Optional dictionary with additional error details.
            cause: Optional underlying exception that caused this error.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.cause = cause


class ValidationError(ApplicationError):
    """Raised when command or input validation fails."""

    def __init__(
        self,
        field: str,
        reason: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        message = f"Validation failed for {field}: {reason}"
        super().__init__(message, details, cause)
        self.field = field
        self.reason = reason


class InstanceInputError(ApplicationError):
    """Raised when an instance or benchmark file cannot be used."""

    def __init__(
        self,
        path: str,
        reason: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        message = f"Cannot read instance {path}: {reason}"
        super().__init__(message, details, cause)
        self.path = path
        self.reason = reason


class DatasetNotFoundError(ApplicationError):
    """Application-level version of the domain DatasetNotFoundError."""

    def __init__(
        self,
        path: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        message = f"Dataset not found: {path}"
        super().__init__(message, details, cause)
        self.path = path


class InfeasibleRouteError(ApplicationError):
    """Raised when a route given by the caller breaks its variant."""

    def __init__(
        self,
        variant: str,
        position: Optional[int],
        reason: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        where = f" at position {position}" if position is not None else ""
        message = f"Route infeasible for {variant}{where}: {reason}"
        super().__init__(message, details, cause)
        self.variant = variant
        self.position = position


class StorageError(ApplicationError):
    """Raised when reading or writing files fails."""

    def __init__(
        self,
        path: str,
        reason: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        message = f"I/O failure on {path}: {reason}"
        super().__init__(message, details, cause)
        self.path = path


def translate_domain_error(domain_error: RoutingDomainError) -> ApplicationError:
    """Translate routing domain errors to application errors.

    Args:
        domain_error: The domain error to translate.

    Returns:
        Appropriate application error.
    """
    if isinstance(domain_error, DomainInstanceParseError):
        return InstanceInputError(
            path=domain_error.path,
            reason=f"line {domain_error.line_number}: {domain_error.reason}",
            details={'line_number': domain_error.line_number},
            cause=domain_error
        )

    elif isinstance(domain_error, DomainInstanceFormatError):
        return InstanceInputError(path=domain_error.path, reason=domain_error.reason, cause=domain_error)

    elif isinstance(domain_error, DomainDatasetNotFoundError):
        return DatasetNotFoundError(path=domain_error.path, cause=domain_error)

    elif isinstance(domain_error, DomainConstraintViolationError):
        return InfeasibleRouteError(
            variant=domain_error.variant,
            position=domain_error.position,
            reason=domain_error.reason,
            details={'position': domain_error.position},
            cause=domain_error
        )

    elif isinstance(domain_error, DomainSizeLimitError):
        return ValidationError(
            field="n",
            reason=domain_error.message,
            details={'size': domain_error.size, 'limit': domain_error.limit},
            cause=domain_error
        )

    else:
        return ApplicationError(
            message=domain_error.message,
            details=getattr(domain_error, 'details', {}),
            cause=domain_error
        )
