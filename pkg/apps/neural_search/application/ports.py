"""Interfaces the application layer needs from the torch infrastructure."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional, Protocol, Sequence

import torch

from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route

from ..domain.enums.search_enums import DecodeMode, DecoderKind
from ..domain.repositories.checkpoint_repository import TrainingLog
from ..domain.value_objects.model_config import ModelConfig
from ..domain.value_objects.train_config import TrainConfig


class SearchEnvironment(Protocol):
    """Batched search state (see ``BatchedSearchEnv``)."""

    cost: torch.Tensor
    best_cost: torch.Tensor
    device: torch.device

    @property
    def batch_size(self) -> int: ...

    @property
    def graph_size(self) -> int: ...

    def step(self, action: Any, check: bool = False) -> torch.Tensor: ...

    def snapshot(self) -> Any: ...

    def at(self, snapshot: Any) -> SearchEnvironment: ...

    def restart_from_current(self) -> None: ...

    def routes(self, best: bool = True) -> list[Route]: ...


class EnvironmentFactory(Protocol):
    def __call__(
        self,
        instances: Sequence[Instance],
        routes: Sequence[Route],
        history_window: int,
        variant: Optional[ProblemVariant] = None,
    ) -> SearchEnvironment: ...


class SearchPolicy(Protocol):
    """Anything that picks pair moves: the learned policy or a hand-crafted one."""

    def __call__(
        self,
        env: Any,
        mode: DecodeMode = DecodeMode.SAMPLE,
        generator: Optional[torch.Generator] = None,
        action: Any = None,
        logit_clip: Optional[float] = None,
    ) -> Any: ...


class NetworkFactory(Protocol):
    """Builds a freshly initialized ``(policy, critic)`` pair."""

    def __call__(self, config: ModelConfig, seed: Optional[int] = None) -> tuple[Any, Any]: ...


class PolicyBuilder(Protocol):
    """Combines learned and hand-crafted decoders into one policy."""

    def __call__(
        self,
        removal: DecoderKind,
        reinsertion: DecoderKind,
        epsilon: float,
        learned: Optional[Any] = None,
    ) -> SearchPolicy: ...


class RunConfigLoader(Protocol):
    """Reads a ``KEY=VALUE`` run configuration file; None gives the defaults."""

    def __call__(self, path: Optional[Path]) -> tuple[TrainConfig, ModelConfig]: ...


class TrainingLogFactory(Protocol):
    def __call__(self, directory: Path) -> TrainingLog: ...


class ReportWriter(Protocol):
    """Persists evaluation reports."""

    def write_json(self, data: dict[str, Any], path: Path) -> Path: ...

    def write_csv(self, rows: Sequence[dict[str, Any]], fields: Sequence[str], path: Path) -> Path: ...
