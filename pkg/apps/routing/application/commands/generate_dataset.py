"""Generate dataset command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ...domain.enums.problem_variant import ProblemVariant


@dataclass(frozen=True, slots=True)
class GenerateDatasetCommand:
    """Command for writing ``count`` random instances with ``n`` requests.

    Instance ``i`` is drawn with seed ``seed + i``.

    Attributes:
        n: Request count per instance.
        count: Number of instances.
        seed: Base seed.
        out_dir: Target directory.
        variant: Variant tag written into every file.
        exact_reference: Also solve each instance exactly and write
            ``reference.txt`` (only for tiny instances).
    """

    n: int
    count: int
    seed: int
    out_dir: Path
    variant: ProblemVariant = ProblemVariant.PDTSP
    exact_reference: bool = False

    def __post_init__(self) -> None:
        """Validate command data."""
        if self.n < 1:
            raise ValueError("Request count must be at least 1")
        if self.count < 1:
            raise ValueError("Instance count must be at least 1")
        if not str(self.out_dir).strip():
            raise ValueError("Output directory is required")

    def __str__(self) -> str:
        return (
            f"GenerateDatasetCommand(n={self.n}, count={self.count}, seed={self.seed}, "
            f"variant={self.variant.value}, out_dir={self.out_dir})"
        )
