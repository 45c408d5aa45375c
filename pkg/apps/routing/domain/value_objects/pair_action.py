"""Pair action value object."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidArgumentError


@dataclass(frozen=True, slots=True)
class PairAction:
    """Remove request ``request`` and reinsert it after two anchors.

    The pickup goes right after ``after_pickup`` (j) and the delivery right
    after ``after_delivery`` (k), both read in the route with the pair
    already removed. ``j == k`` places the pair back to back as
    ``(j, pickup, delivery)``.
    """

    request: int
    after_pickup: int
    after_delivery: int

    def __post_init__(self) -> None:
        if self.request < 1:
            raise InvalidArgumentError("request", f"request ids start at 1, got {self.request}")
        if self.after_pickup < 0 or self.after_delivery < 0:
            raise InvalidArgumentError("anchors", "anchor nodes must be non-negative")

    def validate_for(self, n: int) -> None:
        """Check the action against an instance with ``n`` requests.

        Raises:
            InvalidArgumentError: If the request id is out of range or an
                anchor is one of the moved nodes.
        """
        if self.request > n:
            raise InvalidArgumentError("request", f"request {self.request} exceeds n={n}")
        moved = {self.request, self.request + n}
        for label, anchor in (("after_pickup", self.after_pickup), ("after_delivery", self.after_delivery)):
            if anchor > 2 * n:
                raise InvalidArgumentError(label, f"node {anchor} outside 0..{2 * n}")
            if anchor in moved:
                raise InvalidArgumentError(label, f"anchor {anchor} belongs to the moved request")

    def __str__(self) -> str:
        return f"PairAction(request={self.request}, j={self.after_pickup}, k={self.after_delivery})"
