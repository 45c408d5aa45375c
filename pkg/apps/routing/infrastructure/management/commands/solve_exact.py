"""Django management command that brute-forces a tiny dataset."""

import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from ....application.commands import SolveExactCommand
from ....application.errors import ApplicationError
from ....application.handlers.generate_dataset import REFERENCE_NAME
from ....application.service import RoutingService
from ....domain.enums.problem_variant import ProblemVariant
from ...container import get_container

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Write the optimal cost of every instance as a reference file."""

    help = "Solve every instance of a dataset exactly (n <= 5) and write reference costs"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--dataset", type=str, required=True, help="Dataset directory")
        parser.add_argument("--out", type=str, default=None, help=f"Reference file (default: <dataset>/{REFERENCE_NAME})")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=None,
            help="Solve under this variant instead of the dataset's",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        dataset = Path(options["dataset"])
        try:
            command = SolveExactCommand(
                dataset_dir=dataset,
                out_path=Path(options["out"]) if options["out"] else dataset / REFERENCE_NAME,
                variant=ProblemVariant.from_string(options["variant"]) if options["variant"] else None,
            )
            result = get_container().get(RoutingService).solve_exact(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        for route in result.routes:
            self.stdout.write(f"{route.instance}\t{route.raw_cost:.6f}\t{','.join(map(str, route.order))}")
        self.stdout.write(self.style.SUCCESS(f"Wrote {len(result.routes)} reference costs to {result.reference_path}"))
