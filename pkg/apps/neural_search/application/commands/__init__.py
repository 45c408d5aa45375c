"""Neural search application commands."""

from .evaluate_policy import EvaluatePolicyCommand
from .train_model import TrainModelCommand

__all__ = ["EvaluatePolicyCommand", "TrainModelCommand"]
