"""Pure neural search services: augmentation, schedules and metrics."""

from .metrics import gap_percent, mean_gap_percent
from .schedule import curriculum_steps, learning_rate_at
from .transforms import (
    apply_transform,
    augment_count,
    augmentation_specs,
    random_transform_spec,
    transform_coords,
)

__all__ = [
    "apply_transform",
    "augment_count",
    "augmentation_specs",
    "curriculum_steps",
    "gap_percent",
    "learning_rate_at",
    "mean_gap_percent",
    "random_transform_spec",
    "transform_coords",
]
