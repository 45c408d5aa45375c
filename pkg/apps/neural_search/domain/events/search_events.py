"""Neural search domain events.

Training and evaluation publish their lifecycle on the shared event bus.
The base class is the routing context's ``DomainEvent``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from routing.domain.events.dataset_events import DomainEvent


@dataclass(frozen=True, slots=True)
class TrainingStarted(DomainEvent):
    """A training run began. ``aggregate_id`` is the run directory."""

    start_epoch: int = 0
    epochs: int = 0
    graph_size: int = 0
    variant: str = ""

    @property
    def event_type(self) -> str:
        return "neural_search.training_started"

    def _get_event_data(self) -> dict[str, Any]:
        return {
            "start_epoch": self.start_epoch,
            "epochs": self.epochs,
            "graph_size": self.graph_size,
            "variant": self.variant,
        }


@dataclass(frozen=True, slots=True)
class BatchCompleted(DomainEvent):
    """One training batch finished."""

    epoch: int = 0
    batch: int = 0
    mean_best_cost: float = 0.0
    policy_objective: float = 0.0
    critic_loss: float = 0.0

    @property
    def event_type(self) -> str:
        return "neural_search.batch_completed"

    def _get_event_data(self) -> dict[str, Any]:
        return {
            "epoch": self.epoch,
            "batch": self.batch,
            "mean_best_cost": self.mean_best_cost,
            "policy_objective": self.policy_objective,
            "critic_loss": self.critic_loss,
        }


@dataclass(frozen=True, slots=True)
class EpochCompleted(DomainEvent):
    """One epoch finished; metrics are batch means."""

    epoch: int = 0
    mean_initial_cost: float = 0.0
    mean_best_cost: float = 0.0
    policy_objective: float = 0.0
    critic_loss: float = 0.0
    entropy: float = 0.0
    lr_policy: float = 0.0

    @property
    def event_type(self) -> str:
        return "neural_search.epoch_completed"

    def _get_event_data(self) -> dict[str, Any]:
        return {
            "epoch": self.epoch,
            "mean_initial_cost": self.mean_initial_cost,
            "mean_best_cost": self.mean_best_cost,
            "policy_objective": self.policy_objective,
            "critic_loss": self.critic_loss,
            "entropy": self.entropy,
            "lr_policy": self.lr_policy,
        }


@dataclass(frozen=True, slots=True)
class CheckpointSaved(DomainEvent):
    """A checkpoint was written. ``aggregate_id`` is its path."""

    epoch: int = 0

    @property
    def event_type(self) -> str:
        return "neural_search.checkpoint_saved"

    def _get_event_data(self) -> dict[str, Any]:
        return {"epoch": self.epoch}


@dataclass(frozen=True, slots=True)
class EvaluationCompleted(DomainEvent):
    """A dataset was evaluated. ``aggregate_id`` is the dataset path."""

    instances: int = 0
    steps: int = 0
    augment: bool = False
    mean_cost: float = 0.0
    mean_gap: float | None = None

    @property
    def event_type(self) -> str:
        return "neural_search.evaluation_completed"

    def _get_event_data(self) -> dict[str, Any]:
        return {
            "instances": self.instances,
            "steps": self.steps,
            "augment": self.augment,
            "mean_cost": self.mean_cost,
            "mean_gap": self.mean_gap,
        }
