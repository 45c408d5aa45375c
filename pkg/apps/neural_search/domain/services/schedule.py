"""Curriculum and learning-rate schedules."""

from __future__ import annotations

import math

from ..errors import InvalidConfigError


def curriculum_steps(epoch: int, rho: float) -> int:
    """Warmup steps before a batch of epoch ``epoch`` (0-based).

    Epochs are counted from one here, so the first epoch warms up for
    floor(1 / rho) steps and the last of E epochs for floor(E / rho).
    """
    if epoch < 0:
        raise InvalidConfigError("epoch", f"must be non-negative, got {epoch}")
    if not rho > 0:
        raise InvalidConfigError("curriculum_rho", f"must be positive, got {rho}")
    return math.floor((epoch + 1) / rho)


def learning_rate_at(base: float, decay: float, epoch: int) -> float:
    """Learning rate in effect during epoch ``epoch`` (0-based)."""
    return base * decay**epoch
