"""Batched torch search environment."""

from .batched_env import ActionBatch, BatchedSearchEnv, EnvSnapshot

__all__ = ["ActionBatch", "BatchedSearchEnv", "EnvSnapshot"]
