"""Plot route command."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ...domain.enums.problem_variant import ProblemVariant


@dataclass(frozen=True, slots=True)
class PlotRouteCommand:
    """Command for drawing a route over an instance file.

    Attributes:
        instance_path: Instance file to draw.
        order: Node sequence starting at the depot.
        out_path: Image file; the suffix picks the format.
        variant: Variant to check the route against; defaults to the
            instance's own.
    """

    instance_path: Path
    order: tuple[int, ...]
    out_path: Path
    variant: Optional[ProblemVariant] = None

    def __post_init__(self) -> None:
        """Validate command data."""
        if not self.order:
            raise ValueError("Route is required")
        if Path(self.out_path).suffix.lower() not in (".png", ".svg", ".pdf"):
            raise ValueError("Output file must end in .png, .svg or .pdf")
