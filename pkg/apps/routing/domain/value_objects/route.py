"""Route value object: a cyclic tour starting at the depot."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from typing_extensions import Self

from ..errors import InvalidRouteError
from .instance import DEPOT


@dataclass(frozen=True, slots=True)
class Route:
    """A tour over the nodes of an instance with ``n`` requests.

    ``order`` starts with the depot; the closing return to the depot is
    implicit and never stored. A route is *complete* when it visits all
    ``2n + 1`` nodes. Incomplete routes appear while a request pair is
    removed and waits for reinsertion.

    ``pos[x]`` is the 0-based index of node ``x`` in ``order`` or -1 when
    the node is absent.
    """

    order: tuple[int, ...]
    n: int
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        order = tuple(int(x) for x in self.order)
        object.__setattr__(self, "order", order)

        if self.n < 1:
            raise InvalidRouteError(f"request count must be positive, got {self.n}")
        if not order or order[0] != DEPOT:
            raise InvalidRouteError("route must start at the depot (node 0)")

        size = 2 * self.n + 1
        pos = [-1] * size
        for index, node in enumerate(order):
            if not 0 <= node < size:
                raise InvalidRouteError(f"node {node} outside 0..{size - 1}")
            if pos[node] != -1:
                raise InvalidRouteError(f"node {node} visited twice")
            pos[node] = index
        object.__setattr__(self, "pos", tuple(pos))

    @classmethod
    def from_sequence(cls, nodes: Iterable[int], n: int | None = None) -> Self:
        """Build a route from a node sequence.

        Args:
            nodes: Node indices beginning with the depot.
            n: Request count. Inferred from the length when omitted, which
                only works for complete routes.

        Returns:
            Route instance.
        """
        order = tuple(nodes)
        if n is None:
            if len(order) % 2 == 0:
                raise InvalidRouteError("cannot infer request count from an even-length sequence")
            n = (len(order) - 1) // 2
        return cls(order=order, n=n)

    @property
    def is_complete(self) -> bool:
        return len(self.order) == 2 * self.n + 1

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, node: object) -> bool:
        return isinstance(node, int) and 0 <= node < len(self.pos) and self.pos[node] >= 0

    def position(self, node: int) -> int:
        return self.pos[node]

    def pred(self, node: int) -> int:
        """Predecessor along the cyclic tour (the depot's is the last node)."""
        return self.order[self.pos[node] - 1]

    def succ(self, node: int) -> int:
        """Successor along the cyclic tour (the last node's is the depot)."""
        index = self.pos[node] + 1
        return self.order[index] if index < len(self.order) else self.order[0]

    def without_request(self, request: int) -> Route:
        """Return the route with pickup ``request`` and its delivery removed."""
        pickup, delivery = request, request + self.n
        if pickup not in self or delivery not in self:
            raise InvalidRouteError(f"request {request} is not fully present in the route")
        return Route(
            order=tuple(x for x in self.order if x != pickup and x != delivery),
            n=self.n,
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.order) + ")"
