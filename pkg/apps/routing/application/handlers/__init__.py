"""Routing application handlers."""

from .generate_dataset import GenerateDatasetHandler, GenerateDatasetResult
from .import_benchmark import ImportBenchmarkHandler, ImportBenchmarkResult
from .plot_route import PlotRouteHandler, PlotRouteResult
from .solve_exact import SolveExactHandler, SolveExactResult

__all__ = [
    "GenerateDatasetHandler",
    "GenerateDatasetResult",
    "ImportBenchmarkHandler",
    "ImportBenchmarkResult",
    "PlotRouteHandler",
    "PlotRouteResult",
    "SolveExactHandler",
    "SolveExactResult",
]
