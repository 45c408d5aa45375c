"""Solve exact handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from ...domain.errors import RoutingDomainError
from ...domain.repositories.instance_repository import InstanceRepository
from ...domain.services.exact import brute_force_solve
from ..commands.solve_exact import SolveExactCommand
from ..dto import RouteDTO
from ..errors import ApplicationError, StorageError, translate_domain_error
from .generate_dataset import write_reference_costs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveExactResult:
    """Optimal routes in manifest order and the written reference file."""
    routes: list[RouteDTO]
    reference_path: Path


class SolveExactHandler:
    """Handler that writes brute-force optima as a reference-cost file."""

    def __init__(self, instance_repository: InstanceRepository) -> None:
        self._instance_repository = instance_repository

    def handle(self, command: SolveExactCommand) -> SolveExactResult:
        try:
            _, instances = self._instance_repository.load_dataset(Path(command.dataset_dir))
            routes: list[RouteDTO] = []
            for instance in instances:
                solution = brute_force_solve(instance, command.variant or instance.variant)
                routes.append(
                    RouteDTO(
                        instance=instance.name,
                        order=solution.route.order,
                        cost=solution.cost,
                        raw_cost=instance.denormalize_cost(solution.cost),
                    )
                )
            path = write_reference_costs([route.raw_cost for route in routes], Path(command.out_path))
            logger.info(f"Wrote {len(routes)} exact reference costs to {path}")
            return SolveExactResult(routes=routes, reference_path=path)

        except RoutingDomainError as e:
            raise translate_domain_error(e) from e
        except OSError as e:
            raise StorageError(str(command.out_path), str(e), cause=e) from e
        except Exception as e:
            logger.error(f"Unexpected error while solving {command.dataset_dir}: {e}")
            raise ApplicationError(f"Failed to solve dataset exactly: {e}", cause=e) from e
