"""Routing application commands."""

from .generate_dataset import GenerateDatasetCommand
from .import_benchmark import ImportBenchmarkCommand
from .plot_route import PlotRouteCommand
from .solve_exact import SolveExactCommand

__all__ = [
    "GenerateDatasetCommand",
    "ImportBenchmarkCommand",
    "PlotRouteCommand",
    "SolveExactCommand",
]
