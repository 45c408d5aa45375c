"""Dataset evaluation and reference costs."""

from __future__ import annotations

import logging
import time
from pathlib import Path
from typing import Any, Optional, Sequence

import torch
from tqdm import tqdm

from routing.domain.services.geometry import objective
from routing.domain.value_objects.instance import Instance
from routing.domain.value_objects.route import Route

from ..domain.errors import ReferenceMismatchError
from ..domain.services.metrics import gap_percent
from ..domain.value_objects.inference_config import InferenceConfig
from .dto import EvalReport, InstanceResult
from .ports import EnvironmentFactory, SearchPolicy
from .search import n2s_a_infer, rollout_instances

logger = logging.getLogger(__name__)


def read_reference_costs(path: Path, expected: Optional[int] = None) -> list[float]:
    """Read one cost per line; blank lines are skipped.

    Raises:
        ReferenceMismatchError: If ``expected`` is given and the count differs.
        ValueError: If a line is not a number.
    """
    costs = [float(line) for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    if expected is not None and len(costs) != expected:
        raise ReferenceMismatchError(str(path), expected, len(costs))
    return costs


def _result(
    instance: Instance,
    route: Route,
    steps: int,
    augments: int,
    elapsed: float,
    reference: Optional[float],
) -> InstanceResult:
    cost = objective(instance, route)
    raw_cost = instance.denormalize_cost(cost)
    return InstanceResult(
        instance=instance.name,
        steps=steps,
        augments=augments,
        cost=cost,
        raw_cost=raw_cost,
        route=route.order,
        time=elapsed,
        reference=reference,
        gap=gap_percent(raw_cost, reference) if reference is not None else None,
    )


def evaluate(
    instances: Sequence[Instance],
    policy: SearchPolicy,
    env_factory: EnvironmentFactory,
    config: InferenceConfig,
    seed: int,
    references: Optional[Sequence[float]] = None,
    echo: Optional[dict[str, Any]] = None,
    device: torch.device | str = "cpu",
    quiet: bool = True,
) -> EvalReport:
    """Search every instance and collect costs, gaps and timing.

    Without augmentation instances are stepped together in chunks of
    ``config.batch_size``; chunk ``c`` uses seed ``seed + c``. With
    augmentation every instance is searched on its own with seed
    ``seed + index``.

    Raises:
        ReferenceMismatchError: If ``references`` does not match ``instances``.
    """
    if references is not None and len(references) != len(instances):
        raise ReferenceMismatchError("references", len(instances), len(references))

    started = time.perf_counter()
    results: list[InstanceResult] = []
    total_steps = 0

    def reference(index: int) -> Optional[float]:
        return references[index] if references is not None else None

    if config.augment:
        for index, instance in enumerate(tqdm(instances, desc="eval", disable=quiet)):
            tick = time.perf_counter()
            found = n2s_a_infer(
                instance,
                policy,
                env_factory,
                config.steps,
                seed + index,
                mode=config.mode,
                history_window=config.window_for(instance.size),
                logit_clip=config.logit_clip,
                device=device,
            )
            elapsed = time.perf_counter() - tick
            total_steps += config.steps * found.augments
            results.append(_result(instance, found.best_route, config.steps, found.augments, elapsed, reference(index)))
    else:
        chunks = range(0, len(instances), config.batch_size)
        for chunk, start in enumerate(tqdm(chunks, desc="eval", disable=quiet)):
            batch = instances[start:start + config.batch_size]
            tick = time.perf_counter()
            found = rollout_instances(
                batch,
                policy,
                env_factory,
                config.steps,
                seed + chunk,
                mode=config.mode,
                history_window=config.window_for(batch[0].size),
                logit_clip=config.logit_clip,
                device=device,
            )
            elapsed = (time.perf_counter() - tick) / len(batch)
            total_steps += config.steps * len(batch)
            for offset, (instance, route) in enumerate(zip(batch, found.routes)):
                results.append(_result(instance, route, config.steps, 0, elapsed, reference(start + offset)))

    report = EvalReport(
        results=tuple(results),
        total_steps=total_steps,
        wall_time=time.perf_counter() - started,
        config={**config.to_dict(), "seed": seed, **(echo or {})},
    )
    logger.info(f"Evaluated {len(results)} instances: {report}")
    return report

