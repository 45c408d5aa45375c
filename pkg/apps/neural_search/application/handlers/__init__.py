"""Neural search application handlers."""

from .evaluate_policy import EvaluatePolicyHandler, EvaluatePolicyResult
from .train_model import TrainModelHandler, TrainModelResult

__all__ = [
    "EvaluatePolicyHandler",
    "EvaluatePolicyResult",
    "TrainModelHandler",
    "TrainModelResult",
]
