"""Reward of one improvement step."""

from __future__ import annotations

import math

from ..errors import InvalidArgumentError


def reward(prev_best_cost: float, new_cost: float) -> float:
    """Reduction of the incumbent cost, ``prev_best - min(new, prev_best)``.

    Never negative; summed over a rollout it telescopes to the total
    improvement of the incumbent.
    """
    if not (math.isfinite(prev_best_cost) and math.isfinite(new_cost)):
        raise InvalidArgumentError("cost", f"costs must be finite, got {prev_best_cost}, {new_cost}")
    return prev_best_cost - min(new_cost, prev_best_cost)
