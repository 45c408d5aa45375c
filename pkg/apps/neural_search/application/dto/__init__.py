"""Neural search Data Transfer Objects."""

from .search_dto import CSV_FIELDS, EvalReport, InstanceResult, TrainingRunDTO

__all__ = ["CSV_FIELDS", "EvalReport", "InstanceResult", "TrainingRunDTO"]
