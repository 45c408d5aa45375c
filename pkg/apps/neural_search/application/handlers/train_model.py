"""Train model handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Optional

from routing.domain.errors import RoutingDomainError
from routing.domain.events.dataset_events import DomainEvent

from ...domain.errors import NeuralSearchDomainError
from ...domain.repositories.checkpoint_repository import CheckpointRepository
from ...domain.value_objects.model_config import ModelConfig
from ...domain.value_objects.train_config import TrainConfig
from ..commands.train_model import TrainModelCommand
from ..dto import TrainingRunDTO
from ..errors import ApplicationError, StorageError, translate_domain_error
from ..ports import EnvironmentFactory, NetworkFactory, RunConfigLoader, TrainingLogFactory
from ..trainer import Trainer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainModelResult:
    """Result of a training run."""
    run: TrainingRunDTO


class TrainModelHandler:
    """Handler for starting or resuming a training run.

    On resume the model configuration always comes from the checkpoint. The
    training configuration comes from the checkpoint too unless a config
    file is given, which allows extending a finished run.
    """

    def __init__(
        self,
        checkpoints: CheckpointRepository,
        network_factory: NetworkFactory,
        env_factory: EnvironmentFactory,
        config_loader: RunConfigLoader,
        training_log_factory: TrainingLogFactory,
        event_sink: Optional[Callable[[DomainEvent], None]] = None,
    ) -> None:
        self._checkpoints = checkpoints
        self._network_factory = network_factory
        self._env_factory = env_factory
        self._config_loader = config_loader
        self._training_log_factory = training_log_factory
        self._event_sink = event_sink

    def _configs(self, command: TrainModelCommand, state: Optional[dict]) -> tuple[TrainConfig, ModelConfig]:
        train_config, model_config = self._config_loader(command.config_path)
        if state is not None:
            model_config = ModelConfig.from_dict(state["model_config"])
            if command.config_path is None:
                train_config = TrainConfig.from_dict(state["train_config"])
        if command.variant is not None:
            train_config = replace(train_config, variant=command.variant)
        if command.dim is not None and state is None:
            model_config = model_config.with_dim(command.dim)
        return train_config.resolved(), model_config

    def handle(self, command: TrainModelCommand) -> TrainModelResult:
        """Execute the training use case.

        Raises:
            ApplicationError: If configuration, checkpoint I/O or training fails.
        """
        logger.info(f"Training: {command}")
        out_dir = Path(command.out_dir)
        try:
            state = self._checkpoints.load(Path(command.resume)) if command.resume is not None else None
            train_config, model_config = self._configs(command, state)
            policy, critic = self._network_factory(model_config, command.seed)

            out_dir.mkdir(parents=True, exist_ok=True)
            trainer = Trainer(
                policy,
                critic,
                self._env_factory,
                train_config,
                checkpoints=self._checkpoints,
                training_log=self._training_log_factory(out_dir),
                event_sink=self._event_sink,
                quiet=command.quiet,
                seed=command.seed,
            )
            if state is not None:
                trainer.load_state_dict(state)
                logger.info(f"Resuming {command.resume} at epoch {trainer.start_epoch}")

            summary = trainer.train(out_dir)
            run = TrainingRunDTO(
                out_dir=str(out_dir),
                epochs_completed=summary.epochs_completed,
                checkpoints=tuple(str(path) for path in summary.checkpoints),
                config=train_config.to_dict(),
                model=model_config.to_dict(),
                parameters=sum(p.numel() for p in policy.parameters() if p.requires_grad),
                last_epoch=summary.epoch_metrics[-1] if summary.epoch_metrics else None,
            )
            logger.info(f"Training finished after {run.epochs_completed} epochs in {out_dir}")
            return TrainModelResult(run=run)

        except (NeuralSearchDomainError, RoutingDomainError) as e:
            logger.error(f"Domain error while training into {out_dir}: {e}")
            raise translate_domain_error(e) from e
        except OSError as e:
            logger.error(f"I/O error while training into {out_dir}: {e}")
            raise StorageError(str(out_dir), str(e), cause=e) from e
        except ApplicationError:
            raise
        except Exception as e:
            logger.error(f"Unexpected error while training into {out_dir}: {e}")
            raise ApplicationError(f"Failed to train: {e}", cause=e) from e
