"""Batched pair-removal/reinsertion environment on torch tensors.

Holds ``B`` instances of one size and variant and applies the same
transition, reinsertion mask, reward and incumbent rule as the routing
domain services, for the whole batch at once. Nodes are indexed as in
``routing``: depot 0, pickups ``1..n`` and deliveries ``n+1..2n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import torch

from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.errors import ConstraintViolationError
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route

from ...domain.errors import ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActionBatch:
    """One pair move per instance: remove ``request``, insert after ``j`` and ``k``."""

    request: torch.Tensor
    after_pickup: torch.Tensor
    after_delivery: torch.Tensor

    def detach(self) -> ActionBatch:
        return ActionBatch(self.request.detach(), self.after_pickup.detach(), self.after_delivery.detach())


@dataclass(frozen=True)
class EnvSnapshot:
    """Everything that changes while stepping; coordinates are shared."""

    order: torch.Tensor
    window: torch.Tensor
    cost: torch.Tensor
    best_cost: torch.Tensor
    best_order: torch.Tensor
    steps: int


class BatchedSearchEnv:
    """Search state of a batch of instances.

    Attributes:
        coords: ``(B, N, 2)`` node coordinates.
        order: ``(B, N)`` current tours, each starting at the depot.
        positions: ``(B, N)`` 0-based position of every node.
        window: ``(B, K)`` recent removals, oldest first; 0 marks an empty slot.
        cost: ``(B,)`` current tour lengths.
        best_cost: ``(B,)`` incumbent tour lengths.
        best_order: ``(B, N)`` incumbent tours.
    """

    def __init__(
        self,
        coords: torch.Tensor,
        order: torch.Tensor,
        variant: ProblemVariant,
        history_window: int,
        distances: Optional[torch.Tensor] = None,
    ) -> None:
        if coords.dim() != 3 or coords.size(-1) != 2:
            raise ShapeError("coords", "(batch, nodes, 2)", tuple(coords.shape))
        if order.shape != coords.shape[:2]:
            raise ShapeError("order", f"{tuple(coords.shape[:2])}", tuple(order.shape))
        size = coords.size(1)
        if size < 3 or size % 2 == 0:
            raise ShapeError("order", "an odd node count of at least 3", tuple(order.shape))
        if history_window < 1:
            raise ValueError(f"history_window must be at least 1, got {history_window}")

        self.coords = coords
        self.variant = variant
        self.window_size = history_window
        if distances is None:
            diff = coords.unsqueeze(2) - coords.unsqueeze(1)
            distances = torch.hypot(diff[..., 0], diff[..., 1])
        self.distances = distances

        self._set_order(order.to(device=coords.device, dtype=torch.long))
        self.window = torch.zeros(self.batch_size, history_window, dtype=torch.long, device=coords.device)
        self.cost = self.tour_cost(self.order)
        self.best_cost = self.cost.clone()
        self.best_order = self.order.clone()
        self.steps = 0

    @classmethod
    def from_instances(
        cls,
        instances: Sequence[Instance],
        routes: Sequence[Route],
        history_window: int,
        variant: Optional[ProblemVariant] = None,
        dtype: torch.dtype = torch.float32,
        device: torch.device | str | None = None,
    ) -> BatchedSearchEnv:
        """Stack domain instances and start routes into one environment."""
        if len(instances) != len(routes) or not instances:
            raise ValueError("need one start route per instance and at least one instance")
        sizes = {instance.size for instance in instances}
        if len(sizes) != 1:
            raise ShapeError("instances", "one common node count", tuple(sorted(sizes)))
        coords = torch.stack([torch.as_tensor(instance.coords, dtype=dtype) for instance in instances]).to(device)
        order = torch.tensor([route.order for route in routes], dtype=torch.long, device=coords.device)
        return cls(coords, order, variant or instances[0].variant, history_window)

    @property
    def batch_size(self) -> int:
        return self.coords.size(0)

    @property
    def graph_size(self) -> int:
        return self.coords.size(1)

    @property
    def n_requests(self) -> int:
        return (self.graph_size - 1) // 2

    @property
    def device(self) -> torch.device:
        return self.coords.device

    def _set_order(self, order: torch.Tensor) -> None:
        self.order = order
        self.positions = self._positions_of(order, self.graph_size)

    @staticmethod
    def _positions_of(order: torch.Tensor, size: int) -> torch.Tensor:
        """Inverse permutation; nodes missing from ``order`` get -1."""
        positions = torch.full((order.size(0), size), -1, dtype=torch.long, device=order.device)
        steps = torch.arange(order.size(1), device=order.device).expand_as(order)
        return positions.scatter(1, order, steps)

    def _edge_lengths(self, a: torch.Tensor, b: torch.Tensor) -> torch.Tensor:
        """Distances between node tensors ``a`` and ``b`` of shape ``(B, ...)``."""
        flat = (a * self.graph_size + b).reshape(a.size(0), -1)
        lengths = self.distances.reshape(a.size(0), -1).gather(1, flat)
        return lengths.view(a.shape)

    def tour_cost(self, order: torch.Tensor) -> torch.Tensor:
        """Closed tour length of each ``order`` row (any trailing tour axis)."""
        return self._edge_lengths(order, order.roll(-1, dims=-1)).sum(-1)

    # --- observations -------------------------------------------------

    def pred_nodes(self) -> torch.Tensor:
        """Tour predecessor of every node; the depot's is the last node."""
        return self.order.gather(1, (self.positions - 1) % self.graph_size)

    def succ_nodes(self) -> torch.Tensor:
        return self.order.gather(1, (self.positions + 1) % self.graph_size)

    def history_counts(self) -> torch.Tensor:
        """Removals of requests ``1..n`` within the window, ``(B, n)``."""
        counts = torch.zeros(self.batch_size, self.n_requests + 1, dtype=torch.long, device=self.device)
        counts.scatter_add_(1, self.window, torch.ones_like(self.window))
        return counts[:, 1:]

    def last_removed(self, steps_back: int) -> torch.Tensor:
        """Request removed ``steps_back`` steps ago, 0 when there is none."""
        if steps_back > self.window_size:
            return torch.zeros(self.batch_size, dtype=torch.long, device=self.device)
        return self.window[:, -steps_back]

    def recent_removals(self) -> torch.Tensor:
        """Indicators ``(B, n, 3)``: was request i removed 1, 2 or 3 steps ago."""
        requests = torch.arange(1, self.n_requests + 1, device=self.device)
        return torch.stack(
            [self.last_removed(s).unsqueeze(1) == requests for s in (1, 2, 3)],
            dim=-1,
        )

    # --- pair removal and reinsertion ---------------------------------

    def reduced_order(self, request: torch.Tensor) -> torch.Tensor:
        """Tours without ``request``'s pickup and delivery, ``(B, N - 2)``."""
        pickup = request.unsqueeze(1)
        keep = (self.order != pickup) & (self.order != pickup + self.n_requests)
        return self.order[keep].view(self.batch_size, self.graph_size - 2)

    def reduced_successors(self, request: torch.Tensor) -> torch.Tensor:
        """Successor of every node in the reduced tour; removed nodes map to 0."""
        reduced = self.reduced_order(request)
        successors = torch.zeros_like(self.order)
        return successors.scatter(1, reduced, reduced.roll(-1, dims=1))

    def reinsertion_mask(self, request: torch.Tensor) -> torch.Tensor:
        """Feasible anchor pairs ``(B, N, N)``, indexed ``[j, k]`` by node.

        The pickup may go after ``j`` and the delivery after ``k`` when
        ``j`` does not come after ``k``. Under LIFO the stretch of the
        reduced tour between the two insertion points must also close
        every request it opens, which holds when the loading depth is the
        same at both points and never drops below it in between.
        """
        reduced = self.reduced_order(request)
        batch, length = reduced.shape
        steps = torch.arange(length, device=self.device)
        valid = (steps.unsqueeze(1) <= steps.unsqueeze(0)).expand(batch, length, length)

        if self.variant.is_lifo:
            n = self.n_requests
            step = ((reduced <= n).long() - (reduced > n).long()).masked_fill(reduced == 0, 0)
            depth = step.cumsum(dim=1)
            later = steps.unsqueeze(0) > steps.unsqueeze(1)
            ahead = depth.unsqueeze(1).expand(batch, length, length).masked_fill(~later, n + 1)
            lowest = ahead.cummin(dim=2).values
            start = depth.unsqueeze(2)
            valid = valid & (depth.unsqueeze(1) == start) & (lowest >= start)

        size = self.graph_size
        index = (reduced.unsqueeze(2) * size + reduced.unsqueeze(1)).reshape(batch, -1)
        mask = torch.zeros(batch, size * size, dtype=torch.bool, device=self.device)
        mask.scatter_(1, index, valid.reshape(batch, -1))
        return mask.view(batch, size, size)

    def apply(self, action: ActionBatch) -> torch.Tensor:
        """New tours after ``action`` without changing the state, ``(B, N)``."""
        request = action.request
        n = self.n_requests
        reduced = self.reduced_order(request)
        reduced_positions = self._positions_of(reduced, self.graph_size)
        pos_j = reduced_positions.gather(1, action.after_pickup.unsqueeze(1))
        pos_k = reduced_positions.gather(1, action.after_delivery.unsqueeze(1))
        if bool((pos_j < 0).any() or (pos_k < 0).any()):
            raise ValueError("anchor nodes must stay in the reduced tour")

        keys = 2.0 * torch.arange(reduced.size(1), device=self.device, dtype=torch.float64).expand(reduced.shape)
        keys = torch.cat((keys, 2.0 * pos_j.double() + 1.0, 2.0 * pos_k.double() + 1.5), dim=1)
        nodes = torch.cat((reduced, request.unsqueeze(1), request.unsqueeze(1) + n), dim=1)
        return nodes.gather(1, keys.argsort(dim=1))

    def step(self, action: ActionBatch, check: bool = False) -> torch.Tensor:
        """Apply ``action`` to every instance and return the rewards ``(B,)``.

        The reward is ``best_before - min(new_cost, best_before)``.

        Raises:
            ConstraintViolationError: With ``check``, when an anchor pair is
                outside the reinsertion mask.
        """
        if check:
            mask = self.reinsertion_mask(action.request)
            allowed = mask[torch.arange(self.batch_size, device=self.device), action.after_pickup, action.after_delivery]
            if not bool(allowed.all()):
                row = int((~allowed).nonzero()[0, 0])
                raise ConstraintViolationError(
                    self.variant.value,
                    f"instance {row}: anchors ({int(action.after_pickup[row])}, "
                    f"{int(action.after_delivery[row])}) are infeasible for request {int(action.request[row])}",
                )

        new_order = self.apply(action)
        new_cost = self.tour_cost(new_order)
        improved = new_cost < self.best_cost
        reward = self.best_cost - torch.minimum(new_cost, self.best_cost)

        self._set_order(new_order)
        self.cost = new_cost
        self.best_cost = torch.where(improved, new_cost, self.best_cost)
        self.best_order = torch.where(improved.unsqueeze(1), new_order, self.best_order)
        self.window = torch.cat((self.window[:, 1:], action.request.unsqueeze(1)), dim=1)
        self.steps += 1
        return reward

    # --- costs for hand-crafted decoders ------------------------------

    def removal_savings(self) -> torch.Tensor:
        """Tour length saved by removing each request, ``(B, n)``."""
        n, size = self.n_requests, self.graph_size
        requests = torch.arange(1, n + 1, device=self.device).view(1, n, 1)
        tours = self.order.unsqueeze(1).expand(-1, n, -1)
        keep = (tours != requests) & (tours != requests + n)
        reduced = tours[keep].view(self.batch_size, n, size - 2)
        return self.cost.unsqueeze(1) - self.tour_cost(reduced)

    def insertion_costs(self, request: torch.Tensor) -> torch.Tensor:
        """Tour length after each anchor pair ``(B, N, N)``; ``inf`` where infeasible."""
        size = self.graph_size
        reduced = self.reduced_order(request)
        base = self.tour_cost(reduced)
        succ = self.reduced_successors(request)
        nodes = torch.arange(size, device=self.device).expand(self.batch_size, size)
        pickup = request.unsqueeze(1).expand(-1, size)
        delivery = pickup + self.n_requests

        bridge = self._edge_lengths(nodes, succ)
        after_j = self._edge_lengths(nodes, pickup) + self._edge_lengths(pickup, succ) - bridge
        after_k = self._edge_lengths(nodes, delivery) + self._edge_lengths(delivery, succ) - bridge
        adjacent = (
            self._edge_lengths(nodes, pickup)
            + self._edge_lengths(pickup, delivery)
            + self._edge_lengths(delivery, succ)
            - bridge
        )

        costs = base.view(-1, 1, 1) + after_j.unsqueeze(2) + after_k.unsqueeze(1)
        diagonal = torch.eye(size, dtype=torch.bool, device=self.device).expand_as(costs)
        costs = torch.where(diagonal, (base.unsqueeze(1) + adjacent).unsqueeze(2).expand_as(costs), costs)
        return costs.masked_fill(~self.reinsertion_mask(request), float("inf"))

    # --- state management ---------------------------------------------

    def snapshot(self) -> EnvSnapshot:
        return EnvSnapshot(
            order=self.order.clone(),
            window=self.window.clone(),
            cost=self.cost.clone(),
            best_cost=self.best_cost.clone(),
            best_order=self.best_order.clone(),
            steps=self.steps,
        )

    def restore(self, snapshot: EnvSnapshot) -> None:
        self._set_order(snapshot.order.clone())
        self.window = snapshot.window.clone()
        self.cost = snapshot.cost.clone()
        self.best_cost = snapshot.best_cost.clone()
        self.best_order = snapshot.best_order.clone()
        self.steps = snapshot.steps

    def at(self, snapshot: EnvSnapshot) -> BatchedSearchEnv:
        """A second environment over the same instances, positioned at ``snapshot``."""
        env = BatchedSearchEnv(self.coords, snapshot.order, self.variant, self.window_size, self.distances)
        env.restore(snapshot)
        return env

    def restart_from_current(self) -> None:
        """Make the current tours the start state: fresh incumbents and history."""
        self.best_cost = self.cost.clone()
        self.best_order = self.order.clone()
        self.window.zero_()
        self.steps = 0

    def routes(self, best: bool = True) -> list[Route]:
        """Incumbent (or current) tours as domain routes."""
        orders = self.best_order if best else self.order
        return [Route(order=tuple(row), n=self.n_requests) for row in orders.tolist()]
