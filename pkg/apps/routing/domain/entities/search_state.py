"""SearchState entity: the state of one improvement rollout."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..enums.problem_variant import ProblemVariant
from ..errors import InvalidArgumentError
from ..value_objects.action_history import ActionHistory
from ..value_objects.instance import Instance
from ..value_objects.pair_action import PairAction
from ..value_objects.route import Route
from ..services.geometry import objective
from ..services.moves import apply_action
from ..services.reward import reward


@dataclass
class SearchState:
    """Current tour, removal history and incumbent of a rollout.

    The node features are the instance coordinates and the positional
    features are the 0-based positions of the current route. ``best_cost``
    only ever decreases; ``step`` returns the reward of the move.

    Attributes:
        instance: The instance being improved.
        route: Current solution.
        history: Recent removal requests.
        best_cost: Cost of the best route seen so far.
        best_route: The best route seen so far.
        current_cost: Cost of ``route``.
        steps: Number of moves applied.
    """

    instance: Instance
    route: Route
    history: ActionHistory
    best_cost: float
    best_route: Route
    current_cost: float
    steps: int = 0
    variant: ProblemVariant = field(default=ProblemVariant.PDTSP)

    @classmethod
    def start(
        cls,
        instance: Instance,
        route: Route,
        window_size: int,
        variant: ProblemVariant | None = None,
    ) -> SearchState:
        """Open a rollout at ``route`` with an empty history."""
        if route.n != instance.n:
            raise InvalidArgumentError("route", "route and instance disagree on the request count")
        cost = objective(instance, route)
        return cls(
            instance=instance,
            route=route,
            history=ActionHistory(window_size=window_size),
            best_cost=cost,
            best_route=route,
            current_cost=cost,
            variant=variant or instance.variant,
        )

    @property
    def node_features(self) -> np.ndarray:
        return self.instance.coords

    @property
    def position_features(self) -> tuple[int, ...]:
        return self.route.pos

    def step(self, action: PairAction) -> float:
        """Apply ``action``, record it and update the incumbent.

        Returns:
            The reward ``best_before - min(new_cost, best_before)``.

        Raises:
            ConstraintViolationError: If the move breaks the variant.
        """
        new_route = apply_action(self.route, action, self.variant)
        new_cost = objective(self.instance, new_route)
        gained = reward(self.best_cost, new_cost)

        self.route = new_route
        self.current_cost = new_cost
        self.history = self.history.record(action.request)
        if new_cost < self.best_cost:
            self.best_cost = new_cost
            self.best_route = new_route
        self.steps += 1
        return gained
