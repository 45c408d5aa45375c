"""Evaluate policy handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from routing.domain.errors import RoutingDomainError
from routing.domain.events.dataset_events import DomainEvent
from routing.domain.repositories.instance_repository import InstanceRepository

from ...domain.errors import NeuralSearchDomainError
from ...domain.events.search_events import EvaluationCompleted
from ...domain.repositories.checkpoint_repository import CheckpointRepository
from ...domain.value_objects.inference_config import InferenceConfig
from ...domain.value_objects.model_config import ModelConfig
from ..commands.evaluate_policy import EvaluatePolicyCommand
from ..dto import CSV_FIELDS, EvalReport
from ..errors import ApplicationError, StorageError, translate_domain_error
from ..evaluation import evaluate, read_reference_costs
from ..ports import EnvironmentFactory, NetworkFactory, PolicyBuilder, ReportWriter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvaluatePolicyResult:
    """Result of an evaluation."""
    report: EvalReport
    events: list[DomainEvent]


class EvaluatePolicyHandler:
    """Handler for searching a dataset with a learned or hand-crafted policy."""

    def __init__(
        self,
        instance_repository: InstanceRepository,
        checkpoints: CheckpointRepository,
        network_factory: NetworkFactory,
        policy_builder: PolicyBuilder,
        env_factory: EnvironmentFactory,
        report_writer: ReportWriter,
        device: str = "cpu",
    ) -> None:
        self._instance_repository = instance_repository
        self._checkpoints = checkpoints
        self._network_factory = network_factory
        self._policy_builder = policy_builder
        self._env_factory = env_factory
        self._report_writer = report_writer
        self._device = device

    def _learned_policy(self, checkpoint: Path) -> tuple[Any, dict[str, Any]]:
        state = self._checkpoints.load(checkpoint)
        model_config = ModelConfig.from_dict(state["model_config"])
        policy, _ = self._network_factory(model_config, None)
        policy.load_state_dict(state["policy"])
        policy.eval()
        return policy, {"checkpoint": str(checkpoint), "checkpoint_epoch": state["epoch"], "model": model_config.to_dict()}

    def handle(self, command: EvaluatePolicyCommand) -> EvaluatePolicyResult:
        """Execute the evaluation use case.

        Raises:
            ApplicationError: If the dataset, checkpoint or references cannot
                be used, or the search fails.
        """
        logger.info(f"Evaluating: {command}")
        try:
            manifest, instances = self._instance_repository.load_dataset(Path(command.dataset))
            if command.variant is not None:
                instances = [instance.with_variant(command.variant) for instance in instances]

            learned: Optional[Any] = None
            echo: dict[str, Any] = {
                "dataset": str(command.dataset),
                "variant": instances[0].variant.value if instances else manifest.variant,
                "removal": command.removal.value,
                "reinsertion": command.reinsertion.value,
                "epsilon": command.epsilon,
            }
            if command.uses_learned_decoder:
                learned, checkpoint_echo = self._learned_policy(Path(command.checkpoint))
                echo.update(checkpoint_echo)
            policy = self._policy_builder(command.removal, command.reinsertion, command.epsilon, learned)

            references = None
            if command.reference_path is not None:
                references = read_reference_costs(Path(command.reference_path), expected=len(instances))
                echo["reference"] = str(command.reference_path)

            config = InferenceConfig(
                steps=command.steps,
                augment=command.augment,
                mode=command.mode,
                logit_clip=command.logit_clip,
                batch_size=command.batch_size,
            )
            report = evaluate(
                instances,
                policy,
                self._env_factory,
                config,
                command.seed,
                references=references,
                echo=echo,
                device=self._device,
                quiet=command.quiet,
            )

            if command.out_path is not None:
                self._report_writer.write_json(report.to_dict(), Path(command.out_path))
            if command.csv_path is not None:
                self._report_writer.write_csv(report.csv_rows(), CSV_FIELDS, Path(command.csv_path))

            event = EvaluationCompleted(
                aggregate_id=str(command.dataset),
                instances=len(report.results),
                steps=command.steps,
                augment=command.augment,
                mean_cost=report.mean_cost,
                mean_gap=report.mean_gap,
            )
            return EvaluatePolicyResult(report=report, events=[event])

        except (NeuralSearchDomainError, RoutingDomainError) as e:
            logger.error(f"Domain error while evaluating {command.dataset}: {e}")
            raise translate_domain_error(e) from e
        except OSError as e:
            logger.error(f"I/O error while evaluating {command.dataset}: {e}")
            raise StorageError(str(getattr(e, "filename", None) or command.dataset), str(e), cause=e) from e
        except ApplicationError:
            raise
        except Exception as e:
            logger.error(f"Unexpected error while evaluating {command.dataset}: {e}")
            raise ApplicationError(f"Failed to evaluate: {e}", cause=e) from e
