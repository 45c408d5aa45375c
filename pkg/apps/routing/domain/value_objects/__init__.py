"""Value objects for the routing domain."""

from .action_history import ActionHistory
from .instance import DEPOT, Instance
from .pair_action import PairAction
from .route import Route

__all__ = ["ActionHistory", "DEPOT", "Instance", "PairAction", "Route"]
