"""Shared fixtures for the routing tests."""

import itertools

import numpy as np
import pytest

from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.services.construction import generate_instance
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route


def all_routes(n: int):
    """Every permutation of the 2n customer nodes, depot first."""
    for tail in itertools.permutations(range(1, 2 * n + 1)):
        yield Route(order=(0,) + tail, n=n)


@pytest.fixture
def square_instance() -> Instance:
    """Depot at the origin, one request from (1, 0) to (1, 1)."""
    return Instance(n=1, coords=np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]))


@pytest.fixture
def crossing_route() -> Route:
    """(0, 1+, 2+, 1-, 2-, 3+, 3-): fine for PDTSP, blocked at 1- under LIFO."""
    return Route(order=(0, 1, 2, 4, 5, 3, 6), n=3)


@pytest.fixture
def small_instance() -> Instance:
    return generate_instance(3, seed=11)


@pytest.fixture(params=list(ProblemVariant), ids=lambda variant: variant.value)
def variant(request) -> ProblemVariant:
    return request.param
