"""Import benchmark handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Protocol

from ...domain.enums.problem_variant import ProblemVariant
from ...domain.errors import RoutingDomainError
from ...domain.events.dataset_events import BenchmarkImported, DomainEvent
from ...domain.repositories.instance_repository import InstanceRepository
from ...domain.value_objects.instance import Instance
from ..commands.import_benchmark import ImportBenchmarkCommand
from ..dto import DatasetDTO
from ..errors import ApplicationError, StorageError, translate_domain_error

logger = logging.getLogger(__name__)


class BenchmarkLoader(Protocol):
    """Protocol for reading and normalizing one benchmark file."""

    def __call__(self, path: Path, variant: Optional[ProblemVariant] = None) -> Instance:
        ...


@dataclass(frozen=True)
class ImportBenchmarkResult:
    """Result of a benchmark import."""
    dataset: DatasetDTO
    scales: tuple[float, ...]
    events: list[DomainEvent]


class ImportBenchmarkHandler:
    """Handler that normalizes benchmark files into a dataset directory.

    The normalization scale and offset are stored in each instance file,
    so evaluation can report costs on the original geometry.
    """

    def __init__(self, instance_repository: InstanceRepository, benchmark_loader: BenchmarkLoader) -> None:
        self._instance_repository = instance_repository
        self._benchmark_loader = benchmark_loader

    def handle(self, command: ImportBenchmarkCommand) -> ImportBenchmarkResult:
        logger.info(f"Importing {len(command.sources)} benchmark files into {command.out_dir}")
        try:
            instances = [self._benchmark_loader(Path(source), command.variant) for source in command.sources]
            manifest = self._instance_repository.save_dataset(instances, Path(command.out_dir))
            events: list[DomainEvent] = [
                BenchmarkImported(
                    aggregate_id=str(command.out_dir),
                    source=str(source),
                    n=instance.n,
                    scale=instance.scale,
                )
                for source, instance in zip(command.sources, instances)
            ]
            dataset = DatasetDTO(
                path=str(command.out_dir),
                n=manifest.n,
                count=manifest.count,
                variant=manifest.variant,
                seed=None,
                files=manifest.files,
            )
            return ImportBenchmarkResult(
                dataset=dataset,
                scales=tuple(instance.scale for instance in instances),
                events=events,
            )

        except RoutingDomainError as e:
            logger.error(f"Domain error during benchmark import: {e}")
            raise translate_domain_error(e) from e
        except OSError as e:
            logger.error(f"I/O error during benchmark import: {e}")
            raise StorageError(getattr(e, 'filename', None) or str(command.out_dir), str(e), cause=e) from e
        except Exception as e:
            logger.error(f"Unexpected error during benchmark import: {e}")
            raise ApplicationError(f"Failed to import benchmark: {e}", cause=e) from e
