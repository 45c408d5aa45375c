"""Evaluate policy command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from routing.domain.enums.problem_variant import ProblemVariant

from ...domain.enums.search_enums import DecodeMode, DecoderKind


@dataclass(frozen=True, slots=True)
class EvaluatePolicyCommand:
    """Command for searching every instance of a dataset.

    The removal and reinsertion decoders are chosen independently; a learned
    one needs ``checkpoint``.

    Attributes:
        dataset: Dataset directory.
        checkpoint: Checkpoint file or run directory (latest checkpoint).
        removal: Removal decoder kind.
        reinsertion: Reinsertion decoder kind.
        epsilon: Exploration rate of the epsilon-greedy decoders.
        variant: Overrides the dataset's variant.
        steps: Improvement steps per rollout.
        augment: Search augmented copies and keep the best.
        seed: Seed of start routes, transforms and sampling.
        mode: Sample actions or take the argmax.
        logit_clip: Overrides the model's logit bound.
        batch_size: Instances stepped together without augmentation.
        reference_path: One reference cost per line, in dataset order.
        out_path: Report JSON path.
        csv_path: Optional per-instance CSV path.
        quiet: Hide progress bars.
    """

    dataset: Path
    checkpoint: Optional[Path] = None
    removal: DecoderKind = DecoderKind.LEARNED
    reinsertion: DecoderKind = DecoderKind.LEARNED
    epsilon: float = 0.1
    variant: Optional[ProblemVariant] = None
    steps: int = 1000
    augment: bool = False
    seed: int = 0
    mode: DecodeMode = DecodeMode.SAMPLE
    logit_clip: Optional[float] = None
    batch_size: int = 64
    reference_path: Optional[Path] = None
    out_path: Optional[Path] = None
    csv_path: Optional[Path] = None
    quiet: bool = False

    def __post_init__(self) -> None:
        """Validate command data."""
        if not str(self.dataset).strip():
            raise ValueError("Dataset directory is required")
        if self.uses_learned_decoder and self.checkpoint is None:
            raise ValueError("A learned decoder needs --checkpoint")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("Epsilon must lie in [0, 1]")
        if self.steps < 0:
            raise ValueError("Step count must be non-negative")
        if self.seed < 0:
            raise ValueError("Seed must be non-negative")

    @property
    def uses_learned_decoder(self) -> bool:
        return DecoderKind.LEARNED in (self.removal, self.reinsertion)

    def __str__(self) -> str:
        return (
            f"EvaluatePolicyCommand(dataset={self.dataset}, removal={self.removal.value}, "
            f"reinsertion={self.reinsertion.value}, steps={self.steps}, augment={self.augment})"
        )
