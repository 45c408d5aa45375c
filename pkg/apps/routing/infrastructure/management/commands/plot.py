"""Django management command that draws a route over an instance."""

import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from ....application.commands import PlotRouteCommand
from ....application.errors import ApplicationError
from ....application.service import RoutingService
from ....domain.enums.problem_variant import ProblemVariant
from ...container import get_container

logger = logging.getLogger(__name__)


def parse_route(text: str) -> tuple[int, ...]:
    """Read a node sequence written as ``0,1,3,2,4`` or ``0 1 3 2 4``."""
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(token) for token in tokens)
    except ValueError as e:
        raise ValueError(f"Route must be a list of node ids, got '{text}'") from e


class Command(BaseCommand):
    """Render a feasible route to PNG, SVG or PDF."""

    help = "Plot a route over an instance file; infeasible routes are refused"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--instance", type=str, required=True, help="Instance file")
        parser.add_argument("--route", type=str, required=True, help="Node sequence starting at 0")
        parser.add_argument("--out", type=str, required=True, help="Image path (.png, .svg or .pdf)")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=None,
            help="Check against this variant instead of the instance's",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            command = PlotRouteCommand(
                instance_path=Path(options["instance"]),
                order=parse_route(options["route"]),
                out_path=Path(options["out"]),
                variant=ProblemVariant.from_string(options["variant"]) if options["variant"] else None,
            )
            result = get_container().get(RoutingService).plot_route(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        self.stdout.write(
            self.style.SUCCESS(f"Route with cost {result.route.raw_cost:.6f} drawn to {result.image_path}")
        )
