"""Import benchmark command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ...domain.enums.problem_variant import ProblemVariant


@dataclass(frozen=True, slots=True)
class ImportBenchmarkCommand:
    """Command for normalizing benchmark files into a dataset directory.

    Attributes:
        sources: Benchmark files to import, in dataset order.
        out_dir: Dataset directory to write.
        variant: Overrides the variant named in the file headers.
    """

    sources: tuple[Path, ...]
    out_dir: Path
    variant: Optional[ProblemVariant] = None

    def __post_init__(self) -> None:
        """Validate command data."""
        if not self.sources:
            raise ValueError("At least one benchmark file is required")
        if not str(self.out_dir).strip():
            raise ValueError("Output directory is required")
