"""Feasibility rules for PDTSP and PDTSP-LIFO routes.

Precedence asks every pickup to be visited before its delivery. The LIFO
rule additionally treats the load as a stack: a delivery may only unload
the goods on top. Both are checked on complete routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..enums.problem_variant import ProblemVariant
from ..errors import InvalidRouteError
from ..value_objects.route import Route

PRECEDENCE = "precedence"
LIFO = "lifo"


@dataclass(frozen=True, slots=True)
class StackTrace:
    """Result of replaying a route against a loading stack.

    Attributes:
        stacks: Stack contents (request ids, bottom first) after each
            processed position, starting with the depot's empty stack.
        violation_position: Index of the first delivery that could not
            unload, or None.
        violation_kind: ``"precedence"`` when the goods were never loaded,
            ``"lifo"`` when they are buried under other goods.
    """

    stacks: tuple[tuple[int, ...], ...]
    violation_position: Optional[int] = None
    violation_kind: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.violation_position is None


def lifo_stack_trace(route: Route) -> StackTrace:
    """Simulate loading: push at each pickup, pop at each delivery.

    Replay stops at the first delivery whose goods are not on top of the
    stack; ``stacks`` then holds the states up to the position before it.
    """
    n = route.n
    stack: list[int] = []
    stacks: list[tuple[int, ...]] = [()]
    for index, node in enumerate(route.order[1:], start=1):
        if node <= n:
            stack.append(node)
        else:
            request = node - n
            if not stack or stack[-1] != request:
                kind = LIFO if request in stack else PRECEDENCE
                return StackTrace(stacks=tuple(stacks), violation_position=index, violation_kind=kind)
            stack.pop()
        stacks.append(tuple(stack))
    return StackTrace(stacks=tuple(stacks))


def satisfies_precedence(route: Route) -> bool:
    n, pos = route.n, route.pos
    return all(pos[i] < pos[i + n] for i in range(1, n + 1))


def satisfies_nesting(route: Route) -> bool:
    """Interval form of the LIFO rule.

    Every request spans ``[pos(pickup), pos(delivery)]``; two spans must be
    nested or disjoint, never crossing. Precedence is required as well.
    """
    if not satisfies_precedence(route):
        return False
    n, pos = route.n, route.pos
    spans = [(pos[i], pos[i + n]) for i in range(1, n + 1)]
    for a in range(n):
        a_start, a_end = spans[a]
        for b in range(a + 1, n):
            b_start, b_end = spans[b]
            if a_start < b_start < a_end < b_end or b_start < a_start < b_end < a_end:
                return False
    return True


def first_violation(route: Route, variant: ProblemVariant) -> Optional[int]:
    """Position of the first offending delivery, or None for feasible routes."""
    if not route.is_complete:
        raise InvalidRouteError("feasibility is defined on complete routes only")
    if variant.is_lifo:
        return lifo_stack_trace(route).violation_position
    n = route.n
    for index, node in enumerate(route.order):
        if node > n and route.pos[node - n] > index:
            return index
    return None


def is_feasible(route: Route, variant: ProblemVariant) -> bool:
    """Check ``route`` against the precedence (and for LIFO, stack) rule."""
    return first_violation(route, variant) is None
