"""Django management command that writes a random instance dataset."""

import json
import logging
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from ....application.commands import GenerateDatasetCommand
from ....application.errors import ApplicationError
from ....application.service import RoutingService
from ....domain.enums.problem_variant import ProblemVariant
from ...config import get_config
from ...container import get_container

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Generate ``count`` uniform random instances plus a manifest."""

    help = "Generate a reproducible dataset of random pickup-and-delivery instances"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="Requests per instance (|V| = 2n + 1)")
        parser.add_argument("--count", type=int, default=1, help="Number of instances (default: 1)")
        parser.add_argument("--seed", type=int, default=0, help="Base seed; instance i uses seed + i")
        parser.add_argument("--out", type=str, default=None, help="Output directory (default: <data dir>/pdp<|V|>)")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=ProblemVariant.PDTSP.value,
        )
        parser.add_argument(
            "--exact-ref",
            action="store_true",
            help="Brute-force every instance (n <= 5) and write reference.txt",
        )

    def handle(self, *args: Any, **options: Any) -> None:
        out_dir = options["out"] or str(get_config().storage.data_dir / f"pdp{2 * options['n'] + 1}")
        try:
            command = GenerateDatasetCommand(
                n=options["n"],
                count=options["count"],
                seed=options["seed"],
                out_dir=Path(out_dir),
                variant=ProblemVariant.from_string(options["variant"]),
                exact_reference=options["exact_ref"],
            )
            dataset = get_container().get(RoutingService).generate_dataset(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        self.stdout.write(json.dumps(dataset.to_dict(), indent=2))
        self.stdout.write(self.style.SUCCESS(f"Wrote {dataset.count} instances to {dataset.path}"))
