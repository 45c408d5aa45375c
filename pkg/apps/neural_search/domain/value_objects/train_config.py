"""Training configuration value object."""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace
from typing import Any, Optional

from routing.domain.enums.problem_variant import ProblemVariant

from ..errors import InvalidConfigError

# |V| -> (gradient norm bound, curriculum scalar)
SIZE_DEFAULTS: dict[int, tuple[float, float]] = {
    21: (0.05, 2.0),
    51: (0.15, 1.5),
    101: (0.35, 1.0),
}


def size_defaults(graph_size: int) -> tuple[float, float]:
    """Gradient bound and curriculum scalar for a problem size.

    Sizes between the tabulated ones take the entry of the next larger
    size; sizes above the table take the largest entry.
    """
    for size in sorted(SIZE_DEFAULTS):
        if graph_size <= size:
            return SIZE_DEFAULTS[size]
    return SIZE_DEFAULTS[max(SIZE_DEFAULTS)]


@dataclass(frozen=True, slots=True)
class TrainConfig:
    """Hyperparameters of n-step PPO with curriculum warmup.

    ``grad_clip``, ``curriculum_rho`` and ``history_window`` may be left
    as None; ``resolved`` fills them from ``graph_size``.
    """

    graph_size: int = 21
    variant: ProblemVariant = ProblemVariant.PDTSP
    epochs: int = 200
    batches_per_epoch: int = 20
    batch_size: int = 600
    n_step: int = 5
    t_train: int = 250
    ppo_epochs: int = 3
    clip_epsilon: float = 0.1
    lr_policy: float = 8e-5
    lr_critic: float = 2e-5
    lr_decay: float = 0.985
    gamma: float = 0.999
    grad_clip: Optional[float] = None
    curriculum_rho: Optional[float] = None
    history_window: Optional[int] = None
    checkpoint_every: int = 1

    def __post_init__(self) -> None:
        if self.graph_size < 3 or self.graph_size % 2 == 0:
            raise InvalidConfigError("graph_size", f"|V| = 2n + 1 must be odd and at least 3, got {self.graph_size}")
        for name in ("epochs", "batches_per_epoch", "batch_size", "n_step", "t_train", "ppo_epochs", "checkpoint_every"):
            if getattr(self, name) < 1:
                raise InvalidConfigError(name, f"must be at least 1, got {getattr(self, name)}")
        if self.t_train % self.n_step:
            raise InvalidConfigError("t_train", f"{self.t_train} is not divisible by n_step={self.n_step}")
        if not 0 < self.gamma <= 1:
            raise InvalidConfigError("gamma", f"must lie in (0, 1], got {self.gamma}")
        if not 0 < self.clip_epsilon < 1:
            raise InvalidConfigError("clip_epsilon", f"must lie in (0, 1), got {self.clip_epsilon}")
        for name in ("lr_policy", "lr_critic", "lr_decay"):
            if not getattr(self, name) > 0:
                raise InvalidConfigError(name, f"must be positive, got {getattr(self, name)}")
        if self.grad_clip is not None and not self.grad_clip > 0:
            raise InvalidConfigError("grad_clip", f"must be positive, got {self.grad_clip}")
        if self.curriculum_rho is not None and not self.curriculum_rho > 0:
            raise InvalidConfigError("curriculum_rho", f"must be positive, got {self.curriculum_rho}")
        if self.history_window is not None and self.history_window < 1:
            raise InvalidConfigError("history_window", f"must be at least 1, got {self.history_window}")

    @property
    def n_requests(self) -> int:
        return (self.graph_size - 1) // 2

    @property
    def segments_per_batch(self) -> int:
        return self.t_train // self.n_step

    def resolved(self) -> TrainConfig:
        """Fill size-dependent settings left unset."""
        grad_clip, rho = size_defaults(self.graph_size)
        return replace(
            self,
            grad_clip=self.grad_clip if self.grad_clip is not None else grad_clip,
            curriculum_rho=self.curriculum_rho if self.curriculum_rho is not None else rho,
            history_window=self.history_window if self.history_window is not None else self.graph_size,
        )

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["variant"] = self.variant.value
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> TrainConfig:
        values = dict(data)
        if "variant" in values and not isinstance(values["variant"], ProblemVariant):
            values["variant"] = ProblemVariant.from_string(str(values["variant"]))
        return cls(**values)
