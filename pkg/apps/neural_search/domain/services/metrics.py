"""Gap metric against reference costs."""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import InvalidConfigError


def gap_percent(cost: float, reference: float) -> float:
    """(cost - reference) / reference in percent; negative beats the reference."""
    if not reference > 0 or not math.isfinite(reference):
        raise InvalidConfigError("reference", f"reference costs must be positive and finite, got {reference}")
    return (cost - reference) / reference * 100.0


def mean_gap_percent(costs: Sequence[float], references: Sequence[float]) -> float:
    if len(costs) != len(references):
        raise InvalidConfigError("references", f"{len(references)} references for {len(costs)} costs")
    if not costs:
        return 0.0
    return sum(gap_percent(c, r) for c, r in zip(costs, references)) / len(costs)
