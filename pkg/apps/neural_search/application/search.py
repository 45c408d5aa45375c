"""Inference-time search: plain rollouts and augmented rollouts."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import torch

from routing.domain.services.construction import random_initial_solution
from routing.domain.services.geometry import objective
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route

from ..domain.enums.search_enums import DecodeMode
from ..domain.services.transforms import apply_transform, augmentation_specs
from ..domain.value_objects.inference_config import inference_window
from ..domain.value_objects.transform_spec import TransformSpec
from .ports import EnvironmentFactory, SearchEnvironment, SearchPolicy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RolloutResult:
    """Outcome of a batched rollout.

    Attributes:
        initial_costs: ``(B,)`` costs of the start routes.
        best_costs: ``(B,)`` incumbent costs after the last step.
        routes: Incumbent route of every instance.
        trace: ``(steps + 1, B)`` incumbent cost after each step, when
            recorded; row 0 is the start.
        steps: Steps taken.
    """

    initial_costs: np.ndarray
    best_costs: np.ndarray
    routes: list[Route]
    trace: Optional[np.ndarray]
    steps: int


def rollout(
    env: SearchEnvironment,
    policy: SearchPolicy,
    steps: int,
    generator: Optional[torch.Generator] = None,
    mode: DecodeMode = DecodeMode.SAMPLE,
    logit_clip: Optional[float] = None,
    record_trace: bool = False,
) -> RolloutResult:
    """Step ``env`` with ``policy`` for ``steps`` steps without gradients."""
    initial = env.best_cost.detach().cpu().numpy().astype(np.float64)
    trace = [initial] if record_trace else None
    with torch.no_grad():
        for _ in range(steps):
            output = policy(env, mode, generator, logit_clip=logit_clip)
            env.step(output.action)
            if trace is not None:
                trace.append(env.best_cost.detach().cpu().numpy().astype(np.float64))
    return RolloutResult(
        initial_costs=initial,
        best_costs=env.best_cost.detach().cpu().numpy().astype(np.float64),
        routes=env.routes(best=True),
        trace=np.stack(trace) if trace is not None else None,
        steps=steps,
    )


def rollout_instances(
    instances: Sequence[Instance],
    policy: SearchPolicy,
    env_factory: EnvironmentFactory,
    steps: int,
    seed: int,
    mode: DecodeMode = DecodeMode.SAMPLE,
    history_window: Optional[int] = None,
    logit_clip: Optional[float] = None,
    record_trace: bool = False,
    device: torch.device | str = "cpu",
) -> RolloutResult:
    """Roll out a batch of same-size instances from random start routes.

    Start routes come from ``numpy.random.default_rng(seed)``; actions are
    sampled with a torch generator seeded with ``seed``.
    """
    rng = np.random.default_rng(seed)
    routes = [random_initial_solution(instance, seed=rng) for instance in instances]
    window = history_window if history_window is not None else inference_window(instances[0].size)
    env = env_factory(instances, routes, window)
    generator = torch.Generator(device=device).manual_seed(seed)
    return rollout(env, policy, steps, generator, mode, logit_clip, record_trace)


@dataclass(frozen=True)
class AugmentedResult:
    """Best solution over the augmented copies of one instance.

    Attributes:
        best_cost: Cost of ``best_route`` on the original instance.
        best_route: Winning route; node labels are shared by all copies.
        best_index: Copy that produced the winner.
        copy_costs: Cost of every copy's incumbent on the original instance.
        specs: Transform of every copy.
    """

    best_cost: float
    best_route: Route
    best_index: int
    copy_costs: list[float]
    specs: list[TransformSpec]

    @property
    def augments(self) -> int:
        return len(self.specs)


def n2s_a_infer(
    instance: Instance,
    policy: SearchPolicy,
    env_factory: EnvironmentFactory,
    steps: int,
    seed: int,
    mode: DecodeMode = DecodeMode.SAMPLE,
    history_window: Optional[int] = None,
    logit_clip: Optional[float] = None,
    identity_first: bool = False,
    device: torch.device | str = "cpu",
) -> AugmentedResult:
    """Search ``|V| // 2`` transformed copies of ``instance`` together.

    Every copy starts from its own random route. Incumbents are re-costed on
    the original coordinates and the cheapest one wins; the first copy wins
    ties.
    """
    rng = np.random.default_rng(seed)
    specs = augmentation_specs(instance.size, rng, identity_first=identity_first)
    if not specs:
        specs = [TransformSpec.identity()]
    copies = [apply_transform(instance, spec) for spec in specs]
    result = rollout_instances(
        copies,
        policy,
        env_factory,
        steps,
        int(rng.integers(0, 2**31 - 1)),
        mode=mode,
        history_window=history_window,
        logit_clip=logit_clip,
        device=device,
    )
    copy_costs = [objective(instance, route) for route in result.routes]
    best_index = int(np.argmin(copy_costs))
    logger.debug(f"Augmented search on {instance.name or 'instance'}: best copy {best_index} of {len(specs)}")
    return AugmentedResult(
        best_cost=copy_costs[best_index],
        best_route=result.routes[best_index],
        best_index=best_index,
        copy_costs=copy_costs,
        specs=specs,
    )
