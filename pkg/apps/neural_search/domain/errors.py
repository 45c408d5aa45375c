"""Domain-specific exceptions for the Neural Search context."""

from typing import Any, Optional


class NeuralSearchDomainError(Exception):
    """Base exception for all neural search domain errors."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        """Initialize the domain error.

        Args:
            message: Human-readable error message.
            details: Optional dictionary with additional error details.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidConfigError(NeuralSearchDomainError):
    """Raised when a model, training or inference setting is out of range."""

    def __init__(self, field: str, reason: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Invalid configuration '{field}': {reason}"
        super().__init__(message, details)
        self.field = field
        self.reason = reason


class UnknownConfigKeysError(NeuralSearchDomainError):
    """Raised when a run configuration names keys that do not exist."""

    def __init__(self, keys: list[str], details: Optional[dict[str, Any]] = None) -> None:
        message = f"Unknown configuration keys: {', '.join(sorted(keys))}"
        super().__init__(message, details)
        self.keys = sorted(keys)


class ShapeError(NeuralSearchDomainError):
    """Raised when a tensor reaches a network with the wrong shape."""

    def __init__(self, name: str, expected: str, actual: tuple[int, ...], details: Optional[dict[str, Any]] = None) -> None:
        message = f"{name} has shape {tuple(actual)}, expected {expected}"
        super().__init__(message, details)
        self.name = name
        self.expected = expected
        self.actual = tuple(actual)


class NonFiniteLossError(NeuralSearchDomainError):
    """Raised when a training loss turns NaN or infinite.

    ``details`` carries the diagnostics collected at the failing update.
    """

    def __init__(self, loss_name: str, epoch: int, batch: int, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Non-finite {loss_name} at epoch {epoch}, batch {batch}"
        super().__init__(message, details)
        self.loss_name = loss_name
        self.epoch = epoch
        self.batch = batch


class CheckpointNotFoundError(NeuralSearchDomainError):
    """Raised when a checkpoint file or directory does not exist."""

    def __init__(self, path: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"Checkpoint not found: {path}"
        super().__init__(message, details)
        self.path = path


class CheckpointFormatError(NeuralSearchDomainError):
    """Raised when a checkpoint has an unsupported version or layout."""

    def __init__(self, path: str, reason: str, details: Optional[dict[str, Any]] = None) -> None:
        message = f"{path}: {reason}"
        super().__init__(message, details)
        self.path = path
        self.reason = reason


class ReferenceMismatchError(NeuralSearchDomainError):
    """Raised when a reference-cost file does not line up with the dataset."""

    def __init__(self, path: str, expected: int, actual: int, details: Optional[dict[str, Any]] = None) -> None:
        message = f"{path} holds {actual} reference costs, dataset has {expected} instances"
        super().__init__(message, details)
        self.path = path
        self.expected = expected
        self.actual = actual
