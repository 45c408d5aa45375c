"""Application-level exceptions for the Neural Search context.

They extend the routing application errors so management commands can
catch one ``ApplicationError`` for both contexts.
"""

from typing import Any, Dict, Optional

from routing.application.errors import ApplicationError, StorageError, ValidationError
from routing.application.errors import translate_domain_error as translate_routing_error
from routing.domain.errors import RoutingDomainError

from ..domain.errors import (
    CheckpointFormatError as DomainCheckpointFormatError,
    CheckpointNotFoundError as DomainCheckpointNotFoundError,
    InvalidConfigError as DomainInvalidConfigError,
    NeuralSearchDomainError,
    NonFiniteLossError as DomainNonFiniteLossError,
    ReferenceMismatchError as DomainReferenceMismatchError,
    UnknownConfigKeysError as DomainUnknownConfigKeysError,
)

__all__ = [
    "ApplicationError",
    "CheckpointError",
    "ConfigurationError",
    "StorageError",
    "TrainingDivergedError",
    "ValidationError",
    "translate_domain_error",
]


class CheckpointError(ApplicationError):
    """Raised when a checkpoint is missing or unreadable."""

    def __init__(
        self,
        path: str,
        reason: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        message = f"Checkpoint {path}: {reason}"
        super().__init__(message, details, cause)
        self.path = path


class ConfigurationError(ApplicationError):
    """Raised for invalid run configurations, listing every offending key."""

    def __init__(
        self,
        reason: str,
        keys: Optional[list[str]] = None,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ) -> None:
        super().__init__(f"Invalid configuration: {reason}", details, cause)
        self.keys = keys or []


class TrainingDivergedError(ApplicationError):
    """Raised when a loss turns non-finite; details hold the diagnostics."""


def translate_domain_error(domain_error: Exception) -> ApplicationError:
    """Translate neural search (or routing) domain errors to application errors."""
    if isinstance(domain_error, RoutingDomainError):
        return translate_routing_error(domain_error)

    if isinstance(domain_error, DomainCheckpointNotFoundError):
        return CheckpointError(path=domain_error.path, reason="not found", cause=domain_error)

    elif isinstance(domain_error, DomainCheckpointFormatError):
        return CheckpointError(path=domain_error.path, reason=domain_error.reason, cause=domain_error)

    elif isinstance(domain_error, DomainUnknownConfigKeysError):
        return ConfigurationError(domain_error.message, keys=domain_error.keys, cause=domain_error)

    elif isinstance(domain_error, DomainInvalidConfigError):
        return ConfigurationError(domain_error.message, keys=[domain_error.field], cause=domain_error)

    elif isinstance(domain_error, DomainReferenceMismatchError):
        return ValidationError(
            field="reference",
            reason=domain_error.message,
            details={'expected': domain_error.expected, 'actual': domain_error.actual},
            cause=domain_error
        )

    elif isinstance(domain_error, DomainNonFiniteLossError):
        return TrainingDivergedError(domain_error.message, details=domain_error.details, cause=domain_error)

    elif isinstance(domain_error, NeuralSearchDomainError):
        return ApplicationError(
            message=domain_error.message,
            details=getattr(domain_error, 'details', {}),
            cause=domain_error
        )

    return ApplicationError(message=str(domain_error), cause=domain_error)
