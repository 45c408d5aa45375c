"""Application layer service orchestration for the Neural Search context.

Wires the training and evaluation handlers with the event bus so the
management commands have one entry point.
"""

from __future__ import annotations

import logging
from typing import Optional

from routing.application.event_bus import EventBus
from routing.domain.repositories.instance_repository import InstanceRepository

from ..domain.events.search_events import (
    BatchCompleted,
    CheckpointSaved,
    EpochCompleted,
    EvaluationCompleted,
    TrainingStarted,
)
from ..domain.repositories.checkpoint_repository import CheckpointRepository
from .commands import EvaluatePolicyCommand, TrainModelCommand
from .dto import EvalReport, TrainingRunDTO
from .errors import ApplicationError
from .handlers import EvaluatePolicyHandler, TrainModelHandler
from .ports import (
    EnvironmentFactory,
    NetworkFactory,
    PolicyBuilder,
    ReportWriter,
    RunConfigLoader,
    TrainingLogFactory,
)
from .subscribers import log_search_events

logger = logging.getLogger(__name__)

SEARCH_EVENTS = (TrainingStarted, BatchCompleted, EpochCompleted, CheckpointSaved, EvaluationCompleted)


class NeuralSearchService:
    """High-level service orchestrating training and evaluation."""

    def __init__(
        self,
        instance_repository: InstanceRepository,
        checkpoints: CheckpointRepository,
        network_factory: NetworkFactory,
        env_factory: EnvironmentFactory,
        policy_builder: PolicyBuilder,
        config_loader: RunConfigLoader,
        training_log_factory: TrainingLogFactory,
        report_writer: ReportWriter,
        event_bus: Optional[EventBus] = None,
        device: str = "cpu",
    ) -> None:
        """Initialize the neural search service.

        Args:
            instance_repository: Repository for datasets to evaluate on.
            checkpoints: Repository for training checkpoints.
            network_factory: Builds freshly initialized networks.
            env_factory: Builds batched search environments.
            policy_builder: Combines learned and hand-crafted decoders.
            config_loader: Reads run configuration files.
            training_log_factory: Opens the training log of a run directory.
            report_writer: Writes evaluation reports.
            event_bus: Bus to publish on; a private one is created if omitted.
            device: Torch device of networks and environments.
        """
        self._event_bus = event_bus or EventBus()
        for event_type in SEARCH_EVENTS:
            self._event_bus.subscribe(event_type, log_search_events)

        self._train_handler = TrainModelHandler(
            checkpoints,
            network_factory,
            env_factory,
            config_loader,
            training_log_factory,
            event_sink=self._event_bus.publish,
        )
        self._evaluate_handler = EvaluatePolicyHandler(
            instance_repository,
            checkpoints,
            network_factory,
            policy_builder,
            env_factory,
            report_writer,
            device=device,
        )

    @property
    def event_bus(self) -> EventBus:
        return self._event_bus

    def train(self, command: TrainModelCommand) -> TrainingRunDTO:
        """Train or resume a run.

        Raises:
            ApplicationError: If training fails.
        """
        try:
            return self._train_handler.handle(command).run
        except Exception as e:
            logger.error(f"Failed to train: {e}", exc_info=True)
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Training failed: {e}") from e

    def evaluate(self, command: EvaluatePolicyCommand) -> EvalReport:
        """Evaluate a policy on a dataset.

        Raises:
            ApplicationError: If evaluation fails.
        """
        try:
            result = self._evaluate_handler.handle(command)
            self._event_bus.publish_all(result.events)
            return result.report
        except Exception as e:
            logger.error(f"Failed to evaluate: {e}", exc_info=True)
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Evaluation failed: {e}") from e
