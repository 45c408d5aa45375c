"""Random instance generation and random feasible construction."""

from __future__ import annotations

import numpy as np

from ..enums.problem_variant import ProblemVariant
from ..errors import InvalidArgumentError
from ..value_objects.instance import DEPOT, Instance
from ..value_objects.route import Route


def generate_instance(
    n: int,
    seed: int,
    variant: ProblemVariant = ProblemVariant.PDTSP,
    name: str = "",
) -> Instance:
    """Draw ``2n + 1`` points i.i.d. uniform on the unit square.

    Args:
        n: Number of requests.
        seed: Seed of the generator; equal seeds give equal instances.
        variant: Variant tag stored on the instance.
        name: Optional identifier.

    Returns:
        The generated instance.

    Raises:
        InvalidArgumentError: If ``n < 1``.
    """
    if n < 1:
        raise InvalidArgumentError("n", f"request count must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    coords = rng.uniform(0.0, 1.0, size=(2 * n + 1, 2))
    return Instance(n=n, coords=coords, variant=variant, name=name)


def random_initial_solution(
    instance: Instance,
    variant: ProblemVariant | None = None,
    seed: int | np.random.Generator | None = None,
) -> Route:
    """Build a feasible tour left to right with uniform random choices.

    Each step samples uniformly among the nodes that keep the prefix
    extendable: every unvisited pickup, plus the deliveries of loaded
    requests. Under LIFO only the delivery on top of the stack qualifies.
    The construction never dead-ends under these rules.

    Args:
        instance: The instance to build a tour for.
        variant: Constraint set; defaults to the instance's own variant.
        seed: Integer seed or an existing generator.

    Returns:
        A feasible complete route.
    """
    variant = variant or instance.variant
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    n = instance.n

    order = [DEPOT]
    waiting = list(range(1, n + 1))
    loaded: list[int] = []
    while len(order) < instance.size:
        if variant.is_lifo:
            candidates = waiting + ([loaded[-1] + n] if loaded else [])
        else:
            candidates = waiting + [r + n for r in loaded]
        node = candidates[int(rng.integers(len(candidates)))]
        if node <= n:
            waiting.remove(node)
            loaded.append(node)
        else:
            loaded.remove(node - n)
        order.append(node)
    return Route(order=tuple(order), n=n)
