"""Plot route handler."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Protocol

from ...domain.enums.problem_variant import ProblemVariant
from ...domain.errors import RoutingDomainError
from ...domain.repositories.instance_repository import InstanceRepository
from ...domain.services.geometry import objective
from ...domain.value_objects.instance import Instance
from ...domain.value_objects.route import Route
from ..commands.plot_route import PlotRouteCommand
from ..dto import RouteDTO
from ..errors import ApplicationError, StorageError, translate_domain_error

logger = logging.getLogger(__name__)


class RoutePlotter(Protocol):
    """Protocol for rendering a feasible route to an image file."""

    def __call__(
        self, instance: Instance, route: Route, out_path: Path, variant: Optional[ProblemVariant] = None
    ) -> Path:
        ...


@dataclass(frozen=True)
class PlotRouteResult:
    """Result of a plot request."""
    route: RouteDTO
    image_path: Path


class PlotRouteHandler:
    """Handler that checks a route and renders it to an image."""

    def __init__(self, instance_repository: InstanceRepository, plotter: RoutePlotter) -> None:
        self._instance_repository = instance_repository
        self._plotter = plotter

    def handle(self, command: PlotRouteCommand) -> PlotRouteResult:
        """Draw the route; infeasible routes are refused.

        Raises:
            InfeasibleRouteError: If the route breaks the variant.
            ApplicationError: On any other failure.
        """
        logger.info(f"Plotting route over {command.instance_path} to {command.out_path}")
        try:
            instance = self._instance_repository.load_instance(Path(command.instance_path))
            route = Route.from_sequence(command.order, n=instance.n)
            image_path = self._plotter(instance, route, Path(command.out_path), command.variant)
            cost = objective(instance, route)
            dto = RouteDTO(
                instance=instance.name,
                order=route.order,
                cost=cost,
                raw_cost=instance.denormalize_cost(cost),
            )
            return PlotRouteResult(route=dto, image_path=image_path)

        except RoutingDomainError as e:
            logger.warning(f"Refusing to plot route for {command.instance_path}: {e}")
            raise translate_domain_error(e) from e
        except OSError as e:
            raise StorageError(str(command.out_path), str(e), cause=e) from e
        except Exception as e:
            logger.error(f"Unexpected error while plotting {command.instance_path}: {e}")
            raise ApplicationError(f"Failed to plot route: {e}", cause=e) from e
