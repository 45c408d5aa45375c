"""Django management command that evaluates a policy on a dataset."""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from django.core.management.base import BaseCommand, CommandError, CommandParser

from routing.domain.enums.problem_variant import ProblemVariant

from ....application.commands import EvaluatePolicyCommand
from ....application.errors import ApplicationError
from ....application.service import NeuralSearchService
from ....domain.enums.search_enums import DecodeMode, DecoderKind
from ...config import get_config
from ...container import get_container

logger = logging.getLogger(__name__)


def _optional_path(value: Optional[str]) -> Optional[Path]:
    return Path(value) if value else None


class Command(BaseCommand):
    """Search every instance of a dataset and report costs and gaps."""

    help = "Evaluate a learned or hand-crafted policy; gaps need --ref"

    def add_arguments(self, parser: CommandParser) -> None:
        defaults = get_config().evaluation
        kinds = [kind.value for kind in DecoderKind]
        parser.add_argument("--dataset", type=str, required=True, help="Dataset directory")
        parser.add_argument("--checkpoint", type=str, default=None, help="Checkpoint file or run directory")
        parser.add_argument("--removal", type=str, choices=kinds, default=DecoderKind.LEARNED.value)
        parser.add_argument("--reinsertion", type=str, choices=kinds, default=DecoderKind.LEARNED.value)
        parser.add_argument("--epsilon", type=float, default=defaults.epsilon, help="Exploration of eps-greedy decoders")
        parser.add_argument(
            "--variant",
            type=str,
            choices=[variant.value for variant in ProblemVariant],
            default=None,
            help="Search under this variant instead of the dataset's",
        )
        parser.add_argument("--steps", type=int, default=defaults.steps, help="Improvement steps per rollout")
        parser.add_argument("--augment", action="store_true", help="Search |V|//2 augmented copies per instance")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--mode", type=str, choices=[mode.value for mode in DecodeMode], default=DecodeMode.SAMPLE.value)
        parser.add_argument("--logit-clip", type=float, default=None, help="Override the model's logit bound")
        parser.add_argument("--batch-size", type=int, default=defaults.batch_size)
        parser.add_argument("--ref", type=str, default=None, help="Reference costs, one per line")
        parser.add_argument("--out", type=str, default=None, help="Report JSON path")
        parser.add_argument("--csv", type=str, default=None, help="Per-instance CSV path")
        parser.add_argument("--quiet", action="store_true", help="Hide progress bars")

    def handle(self, *args: Any, **options: Any) -> None:
        try:
            command = EvaluatePolicyCommand(
                dataset=Path(options["dataset"]),
                checkpoint=_optional_path(options["checkpoint"]),
                removal=DecoderKind.from_string(options["removal"]),
                reinsertion=DecoderKind.from_string(options["reinsertion"]),
                epsilon=options["epsilon"],
                variant=ProblemVariant.from_string(options["variant"]) if options["variant"] else None,
                steps=options["steps"],
                augment=options["augment"],
                seed=options["seed"],
                mode=DecodeMode.from_string(options["mode"]),
                logit_clip=options["logit_clip"],
                batch_size=options["batch_size"],
                reference_path=_optional_path(options["ref"]),
                out_path=_optional_path(options["out"]),
                csv_path=_optional_path(options["csv"]),
                quiet=options["quiet"] or not sys.stderr.isatty(),
            )
            report = get_container().get(NeuralSearchService).evaluate(command)
        except (ApplicationError, ValueError) as e:
            raise CommandError(str(e)) from e

        summary = {key: value for key, value in report.to_dict().items() if key != "results"}
        self.stdout.write(json.dumps(summary, indent=2))
        self.stdout.write(self.style.SUCCESS(str(report)))
