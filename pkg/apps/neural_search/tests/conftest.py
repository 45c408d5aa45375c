"""Shared fixtures for the neural search tests."""

from typing import Optional, Sequence

import numpy as np
import pytest
import torch

from neural_search.domain.enums.search_enums import EncoderVariant
from neural_search.domain.value_objects.model_config import ModelConfig
from neural_search.infrastructure.environment.batched_env import BatchedSearchEnv
from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.services.construction import generate_instance, random_initial_solution
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route


def make_env(
    instances: Sequence[Instance],
    routes: Optional[Sequence[Route]] = None,
    history_window: int = 3,
    seed: int = 0,
    dtype: torch.dtype = torch.float64,
) -> BatchedSearchEnv:
    """Environment over ``instances``, from random start routes unless given."""
    if routes is None:
        rng = np.random.default_rng(seed)
        routes = [random_initial_solution(instance, seed=rng) for instance in instances]
    return BatchedSearchEnv.from_instances(instances, routes, history_window, dtype=dtype)


def float64_env_factory(instances, routes, history_window, variant=None):
    return BatchedSearchEnv.from_instances(instances, routes, history_window, variant=variant, dtype=torch.float64)


def random_instances(n: int, count: int, seed: int = 0, variant: ProblemVariant = ProblemVariant.PDTSP) -> list[Instance]:
    return [generate_instance(n, seed + index, variant, name=f"i{index}") for index in range(count)]


@pytest.fixture
def tiny_model_config() -> ModelConfig:
    """|V| = 7 friendly configuration for gradient checks."""
    return ModelConfig(node_dim=16, position_dim=16, n_heads=4, n_layers=1, critic_heads=4)


@pytest.fixture(params=list(EncoderVariant), ids=lambda variant: variant.value)
def encoder_variant(request) -> EncoderVariant:
    return request.param


@pytest.fixture(params=list(ProblemVariant), ids=lambda variant: variant.value)
def problem_variant(request) -> ProblemVariant:
    return request.param
