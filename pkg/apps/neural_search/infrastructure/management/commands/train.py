"""Django management command that trains an N2S policy."""

import json
import logging
import sys
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser

from routing.domain.enums.problem_variant import ProblemVariant

from ....application.commands import TrainModelCommand
from ....application.errors import ApplicationError
from ....application.service import NeuralSearchService
from ...config import get_config
from ...container import get_container

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Train (or resume) a policy and critic with n-step PPO."""

    help = "Train an N2S policy; checkpoints and train_log.tsv go to --out"

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--config", type=str, default=None, help="KEY=VALUE run configuration file")
        parser.add_argument("--seed", type=int, default=0, help="Seed of weights, instances and sampling")
        parser.add_argument("--out", type=str, default=None, help="Run directory (default: <runs dir>/run-<seed>)")
        parser.add_argument("--resume", type=str, default=None, help="Checkpoint file or run directory to continue")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=None,
        )
        parser.add_argument("--dim", type=int, default=None, help="Embedding width of the encoder")
        parser.add_argument("--quiet", action="store_true", help="Hide progress bars")

    def handle(self, *args: Any, **options: Any) -> None:
        out_dir = options["out"] or str(get_config().storage.runs_dir / f"run-{options['seed']}")
        try:
            command = TrainModelCommand(
                out_dir=Path(out_dir),
                seed=options["seed"],
                config_path=Path(options["config"]) if options["config"] else None,
                resume=Path(options["resume"]) if options["resume"] else None,
                variant=ProblemVariant.from_string(options["variant"]) if options["variant"] else None,
                dim=options["dim"],
                quiet=options["quiet"] or not sys.stderr.isatty(),
            )
            run = get_container().get(NeuralSearchService).train(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        self.stdout.write(json.dumps(run.to_dict(), indent=2))
        self.stdout.write(self.style.SUCCESS(f"Trained {run.epochs_completed} epochs into {run.out_dir}"))
