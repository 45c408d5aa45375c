"""Pair removal and reinsertion: the neighborhood move of the search."""

from __future__ import annotations

import numpy as np

from ..enums.problem_variant import ProblemVariant
from ..errors import ConstraintViolationError, InvalidArgumentError, InvalidRouteError
from ..value_objects.pair_action import PairAction
from ..value_objects.route import Route
from .feasibility import first_violation


def apply_action(route: Route, action: PairAction, variant: ProblemVariant | None = None) -> Route:
    """Remove ``action.request`` from ``route`` and splice it back.

    In the reduced route the pickup is inserted right after ``j`` and the
    delivery right after ``k``; ``j == k`` yields ``(j, pickup, delivery)``.

    Args:
        route: Complete route containing the request.
        action: The move to perform.
        variant: When given, the result is checked against this variant.

    Returns:
        The new route.

    Raises:
        InvalidArgumentError: If the anchors are the moved nodes or absent.
        ConstraintViolationError: If ``variant`` is given and the result
            breaks it.
    """
    action.validate_for(route.n)
    pickup, delivery = action.request, action.request + route.n
    reduced = route.without_request(action.request)
    j, k = action.after_pickup, action.after_delivery
    if j not in reduced or k not in reduced:
        raise InvalidArgumentError("anchors", f"anchors {j}, {k} are not in the route")

    order: list[int] = []
    for node in reduced.order:
        order.append(node)
        if node == j:
            order.append(pickup)
        if node == k:
            order.append(delivery)
    result = Route(order=tuple(order), n=route.n)

    if variant is not None:
        position = first_violation(result, variant)
        if position is not None:
            raise ConstraintViolationError(
                variant.value,
                f"reinserting request {action.request} after ({j}, {k}) is infeasible",
                position=position,
            )
    return result


def identity_anchors(route: Route, request: int) -> tuple[int, int]:
    """Anchors that put ``request`` back where it currently is.

    The pickup goes back after its predecessor. The delivery goes back
    after its predecessor, or after that of the pickup when the two are
    adjacent.
    """
    pickup, delivery = request, request + route.n
    j = route.pred(pickup)
    k = route.pred(delivery)
    if k == pickup:
        k = j
    return j, k


def reinsertion_mask(reduced: Route, request: int, variant: ProblemVariant) -> np.ndarray:
    """Feasible reinsertion anchors for ``request`` in a reduced route.

    Entry ``[j, k]`` is True iff inserting the pickup after ``j`` and the
    delivery after ``k`` gives a feasible route. Rows and columns of the
    removed nodes are always False, so ``(2n - 1)^2`` entries are eligible.

    PDTSP: ``pos[j] <= pos[k]``. PDTSP_LIFO: also the nodes strictly between
    the two inserted ones must form a closed set of requests.

    Args:
        reduced: Feasible route with the pair of ``request`` removed.
        request: The removed request.
        variant: Constraint set to respect.

    Returns:
        Boolean array of shape ``(2n + 1, 2n + 1)`` indexed by node ids.

    Raises:
        InvalidArgumentError: If the request's nodes are still present.
    """
    n = reduced.n
    if not 1 <= request <= n:
        raise InvalidArgumentError("request", f"request {request} outside 1..{n}")
    if request in reduced or request + n in reduced:
        raise InvalidArgumentError("reduced", f"request {request} has not been removed from the route")
    if len(reduced) != 2 * n - 1:
        raise InvalidRouteError("reduced route must miss exactly one request pair")

    order = reduced.order
    size = len(order)
    mask = np.zeros((2 * n + 1, 2 * n + 1), dtype=bool)
    for a in range(size):
        open_requests: set[int] = set()
        for b in range(a, size):
            if b > a:
                node = order[b]
                owner = node if node <= n else node - n
                if owner in open_requests:
                    open_requests.remove(owner)
                else:
                    open_requests.add(owner)
            if variant.is_lifo and open_requests:
                continue
            mask[order[a], order[b]] = True
    return mask


def feasible_anchor_pairs(reduced: Route, request: int, variant: ProblemVariant) -> list[tuple[int, int]]:
    """All feasible ``(j, k)`` for ``request``, in ascending node-id order."""
    rows, cols = np.nonzero(reinsertion_mask(reduced, request, variant))
    return [(int(j), int(k)) for j, k in zip(rows, cols)]
