"""Application layer service orchestration for the Routing context.

Wires the routing handlers with the event bus so management commands
and the neural search context have one entry point.
"""

from __future__ import annotations

import logging
from typing import Optional

from ..domain.events.dataset_events import DomainEvent
from ..domain.repositories.instance_repository import InstanceRepository
from .commands import GenerateDatasetCommand, ImportBenchmarkCommand, PlotRouteCommand, SolveExactCommand
from .dto import DatasetDTO
from .errors import ApplicationError
from .event_bus import EventBus
from .handlers import (
    GenerateDatasetHandler,
    ImportBenchmarkHandler,
    PlotRouteHandler,
    PlotRouteResult,
    SolveExactHandler,
    SolveExactResult,
)
from .handlers.import_benchmark import BenchmarkLoader
from .handlers.plot_route import RoutePlotter
from .subscribers import log_routing_events


logger = logging.getLogger(__name__)


class RoutingService:
    """High-level service orchestrating the routing use cases."""

    def __init__(
        self,
        instance_repository: InstanceRepository,
        benchmark_loader: BenchmarkLoader,
        plotter: RoutePlotter,
        event_bus: Optional[EventBus] = None,
    ) -> None:
        """Initialize the routing service.

        Args:
            instance_repository: Repository for instance and dataset files.
            benchmark_loader: Reader for benchmark files.
            plotter: Renderer for route images.
            event_bus: Bus to publish on; a private one is created if omitted.
        """
        self._event_bus = event_bus or EventBus()
        self._event_bus.subscribe(DomainEvent, log_routing_events)

        self._generate_handler = GenerateDatasetHandler(instance_repository)
        self._import_handler = ImportBenchmarkHandler(instance_repository, benchmark_loader)
        self._plot_handler = PlotRouteHandler(instance_repository, plotter)
        self._solve_exact_handler = SolveExactHandler(instance_repository)

    @property
    def event_bus(self) -> EventBus:
        return self._event_bus

    def generate_dataset(self, command: GenerateDatasetCommand) -> DatasetDTO:
        """Write a random dataset.

        Raises:
            ApplicationError: If generation fails.
        """
        try:
            result = self._generate_handler.handle(command)
            self._event_bus.publish_all(result.events)
            return result.dataset
        except Exception as e:
            logger.error(f"Failed to generate dataset: {e}", exc_info=True)
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Dataset generation failed: {e}") from e

    def import_benchmark(self, command: ImportBenchmarkCommand) -> DatasetDTO:
        """Normalize benchmark files into a dataset.

        Raises:
            ApplicationError: If a file cannot be read or written.
        """
        try:
            result = self._import_handler.handle(command)
            self._event_bus.publish_all(result.events)
            return result.dataset
        except Exception as e:
            logger.error(f"Failed to import benchmark: {e}", exc_info=True)
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Benchmark import failed: {e}") from e

    def plot_route(self, command: PlotRouteCommand) -> PlotRouteResult:
        """Render a route; refuses infeasible ones.

        Raises:
            ApplicationError: If the route is infeasible or rendering fails.
        """
        try:
            return self._plot_handler.handle(command)
        except Exception as e:
            logger.error(f"Failed to plot route: {e}")
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Plotting failed: {e}") from e

    def solve_exact(self, command: SolveExactCommand) -> SolveExactResult:
        """Brute-force a tiny dataset and write its reference costs."""
        try:
            return self._solve_exact_handler.handle(command)
        except Exception as e:
            logger.error(f"Failed to solve dataset exactly: {e}", exc_info=True)
            if isinstance(e, ApplicationError):
                raise
            raise ApplicationError(f"Exact solve failed: {e}") from e
