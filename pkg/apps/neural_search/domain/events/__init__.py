"""Neural search domain events."""

from .search_events import BatchCompleted, CheckpointSaved, EpochCompleted, EvaluationCompleted, TrainingStarted

__all__ = ["BatchCompleted", "CheckpointSaved", "EpochCompleted", "EvaluationCompleted", "TrainingStarted"]
