"""Repository protocols for checkpoints and training logs."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional, Protocol

from ..value_objects.training_record import TrainingRecord


class CheckpointRepository(Protocol):
    """Stores training state dictionaries."""

    def save(self, state: dict[str, Any], directory: Path, epoch: int) -> Path:
        """Write the state after ``epoch`` completed epochs; return the file."""
        ...

    def load(self, path: Path) -> dict[str, Any]:
        """Read a checkpoint file, or the latest one when given a directory."""
        ...

    def latest(self, directory: Path) -> Optional[Path]:
        ...


class TrainingLog(Protocol):
    """Append-only sink for per-batch training metrics."""

    def append(self, record: TrainingRecord) -> None:
        ...
