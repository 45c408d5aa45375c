"""Plane isometries used to build augmented instance copies."""

from __future__ import annotations

import numpy as np

from routing.domain.value_objects.instance import Instance

from ..enums.search_enums import TransformOp
from ..value_objects.transform_spec import TransformSpec

# quarter turns -> (cos, sin), exact
_ROTATIONS = {0: (1.0, 0.0), 1: (0.0, 1.0), 2: (-1.0, 0.0), 3: (0.0, -1.0)}


def transform_coords(coords: np.ndarray, spec: TransformSpec) -> np.ndarray:
    """Map an ``(N, 2)`` coordinate array through ``spec``'s ops in order."""
    x = np.array(coords[:, 0], dtype=np.float64)
    y = np.array(coords[:, 1], dtype=np.float64)
    for op in spec.sequence:
        if not spec.enabled(op):
            continue
        if op == TransformOp.FLIP_XY:
            x, y = y, x
        elif op == TransformOp.ONE_MINUS_X:
            x = 1.0 - x
        elif op == TransformOp.ONE_MINUS_Y:
            y = 1.0 - y
        else:
            cos, sin = _ROTATIONS[spec.quarter_turns]
            x, y = x * cos - y * sin, x * sin + y * cos
    return np.stack([x, y], axis=1)


def apply_transform(instance: Instance, spec: TransformSpec) -> Instance:
    """Return a copy of ``instance`` with transformed coordinates.

    Request pairing is unchanged. Rotated points may leave the unit square.
    """
    return instance.with_coords(transform_coords(instance.coords, spec))


def random_transform_spec(rng: np.random.Generator) -> TransformSpec:
    """Shuffle the four ops and draw a setting for each.

    Flips use a fair coin; the rotation picks one of the four quarter turns
    uniformly.
    """
    sequence = tuple(TransformOp(value) for value in rng.permutation([op.value for op in TransformOp]))
    flip_xy, one_minus_x, one_minus_y = (bool(flag) for flag in rng.integers(0, 2, size=3))
    return TransformSpec(
        sequence=sequence,
        flip_xy=flip_xy,
        one_minus_x=one_minus_x,
        one_minus_y=one_minus_y,
        quarter_turns=int(rng.integers(0, 4)),
    )


def augment_count(graph_size: int) -> int:
    """Number of augmented copies for an instance with ``graph_size`` nodes."""
    return graph_size // 2


def augmentation_specs(
    graph_size: int,
    rng: np.random.Generator,
    identity_first: bool = False,
) -> list[TransformSpec]:
    """Draw the specs of all augmented copies.

    With ``identity_first`` the first copy keeps the original geometry.
    """
    specs = [random_transform_spec(rng) for _ in range(augment_count(graph_size))]
    if identity_first and specs:
        specs[0] = TransformSpec.identity()
    return specs
