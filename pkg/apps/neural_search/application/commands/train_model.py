"""Train model command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from routing.domain.enums.problem_variant import ProblemVariant


@dataclass(frozen=True, slots=True)
class TrainModelCommand:
    """Command for training a policy and critic.

    Attributes:
        out_dir: Run directory for checkpoints and the training log.
        seed: Seed of network initialization, instance stream and sampling.
        config_path: ``KEY=VALUE`` run configuration; defaults when None.
        resume: Checkpoint file or run directory to continue from.
        variant: Overrides the configured variant.
        dim: Overrides both embedding widths.
        quiet: Hide progress bars.
    """

    out_dir: Path
    seed: int = 0
    config_path: Optional[Path] = None
    resume: Optional[Path] = None
    variant: Optional[ProblemVariant] = None
    dim: Optional[int] = None
    quiet: bool = False

    def __post_init__(self) -> None:
        """Validate command data."""
        if not str(self.out_dir).strip():
            raise ValueError("Output directory is required")
        if self.dim is not None and (self.dim < 2 or self.dim % 2):
            raise ValueError("Embedding width must be a positive even number")
        if self.seed < 0:
            raise ValueError("Seed must be non-negative")

    def __str__(self) -> str:
        return (
            f"TrainModelCommand(out_dir={self.out_dir}, seed={self.seed}, "
            f"config={self.config_path}, resume={self.resume})"
        )
