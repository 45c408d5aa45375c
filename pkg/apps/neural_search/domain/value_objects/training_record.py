"""One row of the training log."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Any


@dataclass(frozen=True, slots=True)
class TrainingRecord:
    """Metrics of one training batch.

    Attributes:
        epoch: 0-based epoch index.
        batch: 0-based batch index within the epoch.
        mean_initial_cost: Mean cost of the warmed start routes.
        mean_best_cost: Mean incumbent cost after the batch.
        policy_objective: Mean clipped surrogate objective.
        critic_loss: Mean clipped value loss.
        policy_grad_norm: Mean policy gradient norm before clipping.
        critic_grad_norm: Mean critic gradient norm before clipping.
        entropy: Mean entropy of the joint action distribution.
        lr_policy: Policy learning rate in effect.
        lr_critic: Critic learning rate in effect.
    """

    epoch: int
    batch: int
    mean_initial_cost: float
    mean_best_cost: float
    policy_objective: float
    critic_loss: float
    policy_grad_norm: float
    critic_grad_norm: float
    entropy: float
    lr_policy: float
    lr_critic: float

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    @property
    def improvement(self) -> float:
        return self.mean_initial_cost - self.mean_best_cost

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)
