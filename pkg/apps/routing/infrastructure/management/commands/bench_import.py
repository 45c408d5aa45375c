"""Django management command that imports benchmark instance files."""

import json
import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from ....application.commands import ImportBenchmarkCommand
from ....application.errors import ApplicationError
from ....application.service import RoutingService
from ....domain.enums.problem_variant import ProblemVariant
from ...container import get_container

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Normalize benchmark files into the unit square and store them as a dataset."""

    help = "Import benchmark instances (isotropic normalization, scale recorded)"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("files", nargs="+", type=str, help="Benchmark files")
        parser.add_argument("--out", type=str, required=True, help="Dataset directory to write")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=None,
            help="Override the variant named in the file headers",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            command = ImportBenchmarkCommand(
                sources=tuple(Path(name) for name in options["files"]),
                out_dir=Path(options["out"]),
                variant=ProblemVariant.from_string(options["variant"]) if options["variant"] else None,
            )
            dataset = get_container().get(RoutingService).import_benchmark(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        self.stdout.write(json.dumps(dataset.to_dict(), indent=2))
        self.stdout.write(self.style.SUCCESS(f"Imported {dataset.count} instances into {dataset.path}"))
