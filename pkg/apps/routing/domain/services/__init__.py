"""Pure routing services: geometry, feasibility, moves, construction and oracles."""

from .construction import generate_instance, random_initial_solution
from .exact import BRUTE_FORCE_LIMIT, ExactSolution, brute_force_solve
from .feasibility import (
    StackTrace,
    first_violation,
    is_feasible,
    lifo_stack_trace,
    satisfies_nesting,
    satisfies_precedence,
)
from .geometry import distance_matrix, normalize_coordinates, objective
from .moves import apply_action, feasible_anchor_pairs, identity_anchors, reinsertion_mask
from .reward import reward

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "ExactSolution",
    "StackTrace",
    "apply_action",
    "brute_force_solve",
    "distance_matrix",
    "feasible_anchor_pairs",
    "first_violation",
    "generate_instance",
    "identity_anchors",
    "is_feasible",
    "lifo_stack_trace",
    "normalize_coordinates",
    "objective",
    "random_initial_solution",
    "reinsertion_mask",
    "reward",
    "satisfies_nesting",
    "satisfies_precedence",
]
