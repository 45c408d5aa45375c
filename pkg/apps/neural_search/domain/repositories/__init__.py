"""Neural search repository protocols."""

from .checkpoint_repository import CheckpointRepository, TrainingLog

__all__ = ["CheckpointRepository", "TrainingLog"]
