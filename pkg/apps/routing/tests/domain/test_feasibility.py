import pytest

from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.errors import InvalidRouteError
from routing.domain.services.feasibility import (
    LIFO,
    PRECEDENCE,
    first_violation,
    is_feasible,
    lifo_stack_trace,
    satisfies_nesting,
    satisfies_precedence,
)
from routing.domain.value_objects.route import Route

from ..conftest import all_routes


def test_crossing_pattern_is_rejected_only_under_lifo(crossing_route):
    assert is_feasible(crossing_route, ProblemVariant.PDTSP)
    assert not is_feasible(crossing_route, ProblemVariant.PDTSP_LIFO)
    assert first_violation(crossing_route, ProblemVariant.PDTSP_LIFO) == 3


def test_disjoint_requests_are_feasible_for_both(variant):
    assert is_feasible(Route(order=(0, 1, 3, 2, 4), n=2), variant)


def test_stack_trace_of_nested_route():
    trace = lifo_stack_trace(Route(order=(0, 1, 2, 4, 3), n=2))

    assert trace.ok
    assert trace.stacks == ((), (1,), (1, 2), (1,), ())


def test_stack_trace_reports_blocked_delivery():
    trace = lifo_stack_trace(Route(order=(0, 1, 2, 3, 4), n=2))

    assert trace.violation_position == 3
    assert trace.violation_kind == LIFO
    assert trace.stacks == ((), (1,), (1, 2))


def test_stack_trace_reports_precedence_violation():
    trace = lifo_stack_trace(Route(order=(0, 2, 1), n=1))

    assert trace.violation_position == 1
    assert trace.violation_kind == PRECEDENCE


def test_precedence_violation_position():
    assert first_violation(Route(order=(0, 3, 1, 2, 4), n=2), ProblemVariant.PDTSP) == 1


def test_incomplete_route_is_rejected():
    with pytest.raises(InvalidRouteError):
        is_feasible(Route(order=(0, 1), n=1), ProblemVariant.PDTSP)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stack_simulation_matches_interval_nesting(n):
    for route in all_routes(n):
        assert lifo_stack_trace(route).ok == satisfies_nesting(route), route
        assert is_feasible(route, ProblemVariant.PDTSP) == satisfies_precedence(route), route


@pytest.mark.parametrize("n, pdtsp, lifo", [(1, 1, 1), (2, 6, 4), (3, 90, 30)])
def test_feasible_tour_counts(n, pdtsp, lifo):
    routes = list(all_routes(n))

    assert sum(is_feasible(route, ProblemVariant.PDTSP) for route in routes) == pdtsp
    assert sum(is_feasible(route, ProblemVariant.PDTSP_LIFO) for route in routes) == lifo
