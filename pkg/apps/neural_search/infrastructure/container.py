"""Dependency injection container for neural search services."""

from __future__ import annotations

import logging
from functools import partial
from pathlib import Path
from typing import Any, Optional, Sequence, TypeVar

import torch

from routing.application.event_bus import EventBus
from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.repositories.instance_repository import InstanceRepository
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route
from routing.infrastructure.container import get_container as get_routing_container

from ..application.service import NeuralSearchService
from ..domain.enums.search_enums import DecoderKind
from ..domain.repositories.checkpoint_repository import CheckpointRepository
from ..domain.value_objects.model_config import ModelConfig
from .config import SearchInfrastructureConfig, get_config
from .environment.batched_env import BatchedSearchEnv
from .networks.critic import N2SCritic
from .networks.handcrafted import HandcraftedPolicy
from .networks.policy import N2SPolicy, count_parameters
from .repositories.report_writer import FileReportWriter
from .repositories.torch_checkpoint_repository import TorchCheckpointRepository
from .repositories.training_log_writer import TrainingLogWriter
from .run_config import load_run_config

T = TypeVar('T')

logger = logging.getLogger(__name__)


def build_networks(config: ModelConfig, seed: Optional[int] = None, device: str = "cpu") -> tuple[N2SPolicy, N2SCritic]:
    """Freshly initialized policy and critic; equal seeds give equal weights."""
    if seed is not None:
        torch.manual_seed(seed)
    policy = N2SPolicy(config).to(device)
    critic = N2SCritic(config).to(device)
    logger.info(f"Built {config.encoder_variant.value} policy with {count_parameters(policy):,} parameters on {device}")
    return policy, critic


def build_environment(
    instances: Sequence[Instance],
    routes: Sequence[Route],
    history_window: int,
    variant: Optional[ProblemVariant] = None,
    dtype: torch.dtype = torch.float32,
    device: str = "cpu",
) -> BatchedSearchEnv:
    return BatchedSearchEnv.from_instances(instances, routes, history_window, variant, dtype=dtype, device=device)


def build_policy(
    removal: DecoderKind,
    reinsertion: DecoderKind,
    epsilon: float,
    learned: Optional[N2SPolicy] = None,
) -> Any:
    """The learned policy itself, or a composition with hand-crafted decoders."""
    if removal == DecoderKind.LEARNED and reinsertion == DecoderKind.LEARNED and learned is not None:
        return learned
    return HandcraftedPolicy(removal, reinsertion, epsilon, learned)


def open_training_log(directory: Path) -> TrainingLogWriter:
    return TrainingLogWriter(directory)


class InfrastructureContainer:
    """Simple dependency injection container for neural search services."""

    def __init__(self, config: Optional[SearchInfrastructureConfig] = None) -> None:
        """Initialize container with lazy service creation."""
        self._services: dict[type, object] = {}
        self._config = config or get_config()

    def get(self, service_type: type[T]) -> T:
        """Get service instance by type.

        Raises:
            ValueError: If service type is not registered.
        """
        if service_type in self._services:
            return self._services[service_type]  # type: ignore
        service = self._create_service(service_type)
        self._services[service_type] = service
        return service  # type: ignore

    def register(self, service_type: type[T], instance: T) -> None:
        self._services[service_type] = instance

    def _create_service(self, service_type: type) -> object:
        device = self._config.runtime.device
        if service_type in (CheckpointRepository, TorchCheckpointRepository):
            return TorchCheckpointRepository(map_location=device)

        elif service_type == InstanceRepository:
            return get_routing_container().get(InstanceRepository)

        elif service_type == EventBus:
            return EventBus()

        elif service_type == NeuralSearchService:
            return NeuralSearchService(
                instance_repository=self.get(InstanceRepository),
                checkpoints=self.get(CheckpointRepository),
                network_factory=partial(build_networks, device=device),
                env_factory=partial(
                    build_environment,
                    dtype=getattr(torch, self._config.runtime.env_dtype),
                    device=device,
                ),
                policy_builder=build_policy,
                config_loader=load_run_config,
                training_log_factory=open_training_log,
                report_writer=FileReportWriter(),
                event_bus=self.get(EventBus),
                device=device,
            )

        else:
            raise ValueError(f"Unknown service type: {service_type}")


_container: Optional[InfrastructureContainer] = None


def get_container() -> InfrastructureContainer:
    """Get the global neural search container."""
    global _container
    if _container is None:
        _container = InfrastructureContainer()
    return _container


def set_container(container: InfrastructureContainer) -> None:
    """Set the global neural search container."""
    global _container
    _container = container
