"""Solve exact command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ...domain.enums.problem_variant import ProblemVariant


@dataclass(frozen=True, slots=True)
class SolveExactCommand:
    """Command for brute-forcing every instance of a tiny dataset.

    Attributes:
        dataset_dir: Dataset to solve.
        out_path: Reference-cost file, one float per line in manifest order.
        variant: Overrides the dataset variant.
    """

    dataset_dir: Path
    out_path: Path
    variant: Optional[ProblemVariant] = None

    def __post_init__(self) -> None:
        """Validate command data."""
        if not str(self.dataset_dir).strip():
            raise ValueError("Dataset directory is required")
