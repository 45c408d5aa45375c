"""Domain enumerations for the routing context."""

from .problem_variant import ProblemVariant

__all__ = ["ProblemVariant"]
