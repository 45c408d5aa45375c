"""Inference configuration value object."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional

from ..enums.search_enums import DecodeMode
from ..errors import InvalidConfigError


def inference_window(graph_size: int) -> int:
    """History window used at inference: half the node count, at least 1."""
    return max(1, graph_size // 2)


@dataclass(frozen=True, slots=True)
class InferenceConfig:
    """Settings of an evaluation rollout.

    Attributes:
        steps: Improvement steps per rollout.
        augment: Roll out ``|V| // 2`` augmented copies and keep the best.
        mode: Sample actions or take the argmax.
        history_window: Removal history length; ``|V| // 2`` when None.
        logit_clip: Overrides the model's logit bound when set.
        batch_size: Instances stepped together without augmentation.
    """

    steps: int = 1000
    augment: bool = False
    mode: DecodeMode = DecodeMode.SAMPLE
    history_window: Optional[int] = None
    logit_clip: Optional[float] = None
    batch_size: int = 64

    def __post_init__(self) -> None:
        if self.steps < 0:
            raise InvalidConfigError("steps", f"must be non-negative, got {self.steps}")
        if self.history_window is not None and self.history_window < 1:
            raise InvalidConfigError("history_window", f"must be at least 1, got {self.history_window}")
        if self.logit_clip is not None and not self.logit_clip > 0:
            raise InvalidConfigError("logit_clip", f"must be positive, got {self.logit_clip}")
        if self.batch_size < 1:
            raise InvalidConfigError("batch_size", f"must be at least 1, got {self.batch_size}")

    def window_for(self, graph_size: int) -> int:
        return self.history_window if self.history_window is not None else inference_window(graph_size)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["mode"] = self.mode.value
        return data
