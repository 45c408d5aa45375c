"""Euclidean geometry helpers: tour length and coordinate normalization."""

from __future__ import annotations

import numpy as np

from ..errors import InvalidRouteError
from ..value_objects.instance import Instance
from ..value_objects.route import Route


def distance_matrix(coords: np.ndarray) -> np.ndarray:
    """Pairwise Euclidean distances, shape ``(N, N)``."""
    diff = coords[:, None, :] - coords[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def objective(instance: Instance, route: Route) -> float:
    """Length of the closed tour described by ``route``.

    Sums the edges along ``route.order`` plus the closing edge back to the
    depot.

    Raises:
        InvalidRouteError: If the route does not visit every node.
    """
    if route.n != instance.n or not route.is_complete:
        raise InvalidRouteError(
            f"route over {len(route)} nodes does not cover instance with {instance.size} nodes"
        )
    path = instance.coords[list(route.order)]
    step = np.roll(path, -1, axis=0) - path
    return float(np.hypot(step[:, 0], step[:, 1]).sum())


def normalize_coordinates(raw: np.ndarray) -> tuple[np.ndarray, float, tuple[float, float]]:
    """Map raw coordinates into the unit square with one isotropic scale.

    The bounding-box minimum corner moves to the origin and the longer side
    is scaled to length 1, so ratios of tour lengths are unchanged.

    Returns:
        ``(normalized, scale, offset)`` with ``normalized = (raw - offset) * scale``.
    """
    raw = np.asarray(raw, dtype=np.float64)
    lower = raw.min(axis=0)
    extent = float((raw.max(axis=0) - lower).max())
    scale = 1.0 / extent if extent > 0 else 1.0
    return (raw - lower) * scale, scale, (float(lower[0]), float(lower[1]))
