"""Instance value object: node coordinates and request pairing."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..enums.problem_variant import ProblemVariant
from ..errors import InvalidArgumentError

DEPOT = 0


@dataclass(frozen=True, slots=True, eq=False)
class Instance:
    """One pickup-and-delivery instance.

    Node 0 is the depot, nodes ``1..n`` are pickups and node ``i + n`` is
    the delivery paired with pickup ``i``. Coordinates live on the unit
    square scale; benchmark instances keep the normalization ``scale`` and
    ``offset`` so costs can be reported on the original geometry.

    Attributes:
        n: Number of requests.
        coords: Array of shape ``(2n + 1, 2)``; read-only.
        variant: Which constraint set applies to routes of this instance.
        name: Optional identifier used in reports and file names.
        scale: Factor applied to raw coordinates during normalization.
        offset: Raw-space corner subtracted before scaling.
    """

    n: int
    coords: np.ndarray
    variant: ProblemVariant = ProblemVariant.PDTSP
    name: str = ""
    scale: float = 1.0
    offset: tuple[float, float] = field(default=(0.0, 0.0))

    def __post_init__(self) -> None:
        """Validate the instance and freeze the coordinate buffer."""
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidArgumentError("n", f"request count must be a positive integer, got {self.n!r}")

        coords = np.array(self.coords, dtype=np.float64)
        if coords.shape != (2 * self.n + 1, 2):
            raise InvalidArgumentError(
                "coords",
                f"expected shape {(2 * self.n + 1, 2)}, got {coords.shape}",
            )
        if not np.all(np.isfinite(coords)):
            raise InvalidArgumentError("coords", "all coordinate components must be finite")
        if not self.scale > 0:
            raise InvalidArgumentError("scale", f"must be positive, got {self.scale}")

        coords.setflags(write=False)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "coords", coords)

    @property
    def size(self) -> int:
        """Number of nodes |V| = 2n + 1."""
        return 2 * self.n + 1

    def pickup(self, request: int) -> int:
        """Node index of the pickup of ``request``."""
        return request

    def delivery(self, request: int) -> int:
        """Node index of the delivery of ``request``."""
        return request + self.n

    def is_pickup(self, node: int) -> bool:
        return 1 <= node <= self.n

    def is_delivery(self, node: int) -> bool:
        return self.n < node <= 2 * self.n

    def request_of(self, node: int) -> int:
        """Request id served at ``node`` (0 for the depot)."""
        if node == DEPOT:
            return 0
        return node if node <= self.n else node - self.n

    def with_coords(self, coords: np.ndarray) -> Instance:
        """Return a copy with new coordinates and the same pairing."""
        return Instance(
            n=self.n,
            coords=coords,
            variant=self.variant,
            name=self.name,
            scale=self.scale,
            offset=self.offset,
        )

    def with_variant(self, variant: ProblemVariant) -> Instance:
        return Instance(
            n=self.n,
            coords=self.coords,
            variant=variant,
            name=self.name,
            scale=self.scale,
            offset=self.offset,
        )

    def denormalize_cost(self, cost: float) -> float:
        """Map a tour length on normalized coordinates back to raw units."""
        return cost / self.scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.n == other.n
            and self.variant == other.variant
            and self.name == other.name
            and self.scale == other.scale
            and tuple(self.offset) == tuple(other.offset)
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.variant, self.name, self.coords.tobytes()))

    def __repr__(self) -> str:
        label = f"'{self.name}', " if self.name else ""
        return f"Instance({label}n={self.n}, variant={self.variant.value})"
