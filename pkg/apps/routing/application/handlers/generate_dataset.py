"""Generate dataset handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from ...domain.errors import RoutingDomainError
from ...domain.events.dataset_events import DatasetGenerated, DomainEvent
from ...domain.repositories.instance_repository import InstanceRepository
from ...domain.services.construction import generate_instance
from ...domain.services.exact import brute_force_solve
from ..commands.generate_dataset import GenerateDatasetCommand
from ..dto import DatasetDTO
from ..errors import ApplicationError, StorageError, translate_domain_error

logger = logging.getLogger(__name__)

REFERENCE_NAME = "reference.txt"


@dataclass(frozen=True)
class GenerateDatasetResult:
    """Result of a dataset generation."""
    dataset: DatasetDTO
    events: list[DomainEvent]


def write_reference_costs(costs: list[float], path: Path) -> Path:
    """Write one cost per line; ``repr`` keeps every digit."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{cost!r}\n" for cost in costs), encoding="utf-8")
    return path


class GenerateDatasetHandler:
    """Handler for writing a reproducible random dataset.

    Instance ``i`` uses seed ``seed + i`` and is named
    ``pdp<size>_<index>``, so the same command always writes the same bytes.
    """

    def __init__(self, instance_repository: InstanceRepository) -> None:
        self._instance_repository = instance_repository

    def handle(self, command: GenerateDatasetCommand) -> GenerateDatasetResult:
        """Execute the dataset generation use case.

        Raises:
            ApplicationError: If generation or writing fails.
        """
        logger.info(f"Generating dataset: {command}")
        out_dir = Path(command.out_dir)
        size = 2 * command.n + 1
        width = max(4, len(str(command.count - 1)))
        try:
            seeds = [command.seed + index for index in range(command.count)]
            instances = [
                generate_instance(command.n, seed, command.variant, name=f"pdp{size}_{index:0{width}d}")
                for index, seed in enumerate(seeds)
            ]
            manifest = self._instance_repository.save_dataset(instances, out_dir, seed=command.seed, seeds=seeds)

            reference_path = None
            if command.exact_reference:
                logger.debug(f"Solving {len(instances)} instances exactly for the reference file")
                costs = [brute_force_solve(instance, command.variant).cost for instance in instances]
                reference_path = str(write_reference_costs(costs, out_dir / REFERENCE_NAME))

            dataset = DatasetDTO(
                path=str(out_dir),
                n=manifest.n,
                count=manifest.count,
                variant=manifest.variant,
                seed=manifest.seed,
                files=manifest.files,
                reference_path=reference_path,
            )
            event = DatasetGenerated(
                aggregate_id=str(out_dir),
                n=command.n,
                count=command.count,
                seed=command.seed,
                variant=command.variant.value,
            )
            logger.info(f"Dataset with {manifest.count} instances written to {out_dir}")
            return GenerateDatasetResult(dataset=dataset, events=[event])

        except RoutingDomainError as e:
            logger.error(f"Domain error while generating dataset in {out_dir}: {e}")
            raise translate_domain_error(e) from e
        except OSError as e:
            logger.error(f"I/O error while generating dataset in {out_dir}: {e}")
            raise StorageError(str(out_dir), str(e), cause=e) from e
        except Exception as e:
            logger.error(f"Unexpected error while generating dataset in {out_dir}: {e}")
            raise ApplicationError(f"Failed to generate dataset: {e}", cause=e) from e
