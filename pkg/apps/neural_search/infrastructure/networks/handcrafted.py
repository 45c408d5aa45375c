"""Hand-crafted removal and reinsertion decoders for the decoding ablation.

RANDOM is uniform over the feasible choices. EPS_GREEDY takes the greedy
choice with probability ``1 - epsilon`` and a uniform feasible one
otherwise; greedy removal frees the most tour length and greedy
reinsertion gives the shortest tour. Both are expressed as probability
tables so sampling, argmax and log-probabilities work as for the learned
decoders. Ties go to the smallest index.
"""

from __future__ import annotations

from typing import Optional

import torch
from torch import nn

from ...domain.enums.search_enums import DecodeMode, DecoderKind
from ...domain.errors import InvalidConfigError
from ..environment.batched_env import ActionBatch, BatchedSearchEnv
from .policy import N2SPolicy, PolicyOutput, decode


def uniform_log_probs(feasible: torch.Tensor) -> torch.Tensor:
    """Log of the uniform distribution over ``True`` entries of each row."""
    probs = feasible.to(torch.float64) / feasible.sum(dim=-1, keepdim=True)
    return probs.log()


def epsilon_greedy_log_probs(feasible: torch.Tensor, greedy: torch.Tensor, epsilon: float) -> torch.Tensor:
    """Mix a one-hot on ``greedy`` with the uniform feasible distribution."""
    uniform = feasible.to(torch.float64) / feasible.sum(dim=-1, keepdim=True)
    one_hot = torch.zeros_like(uniform).scatter(1, greedy.unsqueeze(1), 1.0)
    return ((1.0 - epsilon) * one_hot + epsilon * uniform).log()


def removal_log_probs(env: BatchedSearchEnv, kind: DecoderKind, epsilon: float) -> torch.Tensor:
    feasible = torch.ones(env.batch_size, env.n_requests, dtype=torch.bool, device=env.device)
    if kind == DecoderKind.RANDOM:
        return uniform_log_probs(feasible)
    greedy = env.removal_savings().argmax(dim=-1)
    return epsilon_greedy_log_probs(feasible, greedy, epsilon)


def reinsertion_log_probs(env: BatchedSearchEnv, request: torch.Tensor, kind: DecoderKind, epsilon: float) -> torch.Tensor:
    if kind == DecoderKind.RANDOM:
        return uniform_log_probs(env.reinsertion_mask(request).flatten(1))
    costs = env.insertion_costs(request).flatten(1)
    return epsilon_greedy_log_probs(torch.isfinite(costs), costs.argmin(dim=-1), epsilon)


class HandcraftedPolicy(nn.Module):
    """Compose removal and reinsertion decoders of any kind.

    A LEARNED role uses the matching decoder of ``learned``; the other
    role uses the hand-crafted rule.
    """

    def __init__(
        self,
        removal: DecoderKind = DecoderKind.RANDOM,
        reinsertion: DecoderKind = DecoderKind.RANDOM,
        epsilon: float = 0.1,
        learned: Optional[N2SPolicy] = None,
    ) -> None:
        super().__init__()
        if not 0.0 <= epsilon <= 1.0:
            raise InvalidConfigError("epsilon", f"must lie in [0, 1], got {epsilon}")
        if DecoderKind.LEARNED in (removal, reinsertion) and learned is None:
            raise InvalidConfigError("learned", "a learned decoder role needs a trained policy")
        self.removal = removal
        self.reinsertion = reinsertion
        self.epsilon = epsilon
        self.learned = learned

    def describe(self) -> str:
        return f"removal={self.removal.value}, reinsertion={self.reinsertion.value}, epsilon={self.epsilon}"

    def forward(
        self,
        env: BatchedSearchEnv,
        mode: DecodeMode = DecodeMode.SAMPLE,
        generator: Optional[torch.Generator] = None,
        action: Optional[ActionBatch] = None,
        logit_clip: Optional[float] = None,
    ) -> PolicyOutput:
        embeddings = pooled = None
        clip = logit_clip
        if self.learned is not None and DecoderKind.LEARNED in (self.removal, self.reinsertion):
            embeddings, pooled = self.learned.embed(env)
            clip = logit_clip if logit_clip is not None else self.learned.config.logit_clip

        def removal() -> torch.Tensor:
            if self.removal == DecoderKind.LEARNED:
                return self.learned.removal_log_probs(env, pooled, clip).to(torch.float64)
            return removal_log_probs(env, self.removal, self.epsilon)

        def reinsertion(request: torch.Tensor) -> torch.Tensor:
            if self.reinsertion == DecoderKind.LEARNED:
                return self.learned.reinsertion_log_probs(env, pooled, request, clip).to(torch.float64)
            return reinsertion_log_probs(env, request, self.reinsertion, self.epsilon)

        return decode(env, removal, reinsertion, mode=mode, generator=generator, action=action, embeddings=embeddings)
