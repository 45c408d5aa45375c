"""Exhaustive solver for tiny instances, used as an optimality oracle."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..enums.problem_variant import ProblemVariant
from ..errors import SizeLimitError
from ..value_objects.instance import DEPOT, Instance
from ..value_objects.route import Route
from .geometry import distance_matrix, objective

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 5


@dataclass(frozen=True, slots=True)
class ExactSolution:
    """Optimal tour with its cost and the number of feasible tours seen."""

    cost: float
    route: Route
    evaluated: int


def brute_force_solve(instance: Instance, variant: ProblemVariant | None = None) -> ExactSolution:
    """Enumerate every feasible tour and keep the shortest.

    Tours are generated depth first with candidates in ascending node id,
    i.e. in lexicographic order of the node sequence; a later tour only
    replaces the incumbent when strictly shorter, so ties resolve to the
    lexicographically smallest sequence.

    Raises:
        SizeLimitError: If the instance has more than five requests.
    """
    variant = variant or instance.variant
    n = instance.n
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError("brute_force_solve", n, BRUTE_FORCE_LIMIT)

    dist = distance_matrix(instance.coords)
    size = instance.size
    order = [DEPOT]
    visited = [False] * size
    visited[DEPOT] = True
    stack: list[int] = []
    best_cost = float("inf")
    best_order: tuple[int, ...] = ()
    evaluated = 0

    def allowed(node: int) -> bool:
        if node <= n:
            return True
        request = node - n
        if variant.is_lifo:
            return bool(stack) and stack[-1] == request
        return visited[request]

    def extend(length: float) -> None:
        nonlocal best_cost, best_order, evaluated
        if len(order) == size:
            evaluated += 1
            total = length + dist[order[-1], DEPOT]
            if total < best_cost:
                best_cost = total
                best_order = tuple(order)
            return
        last = order[-1]
        for node in range(1, size):
            if visited[node] or not allowed(node):
                continue
            visited[node] = True
            order.append(node)
            if node <= n:
                stack.append(node)
            elif variant.is_lifo:
                stack.pop()
            extend(length + dist[last, node])
            if node <= n:
                stack.pop()
            elif variant.is_lifo:
                stack.append(node - n)
            order.pop()
            visited[node] = False

    extend(0.0)
    route = Route(order=best_order, n=n)
    logger.debug(f"Brute force over {evaluated} feasible tours for n={n} ({variant.value})")
    return ExactSolution(cost=objective(instance, route), route=route, evaluated=evaluated)
