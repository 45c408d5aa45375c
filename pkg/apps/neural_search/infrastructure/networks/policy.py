"""The N2S policy and shared action selection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import torch
from torch import nn

from ...domain.enums.search_enums import DecodeMode
from ...domain.value_objects.model_config import ModelConfig
from ..environment.batched_env import ActionBatch, BatchedSearchEnv
from .decoders import MaxPooling, ReinsertionDecoder, RemovalDecoder
from .encoder import N2SEncoder


@dataclass(frozen=True)
class PolicyOutput:
    """Chosen actions with their joint log-probability.

    Attributes:
        action: The selected pair moves.
        log_prob: ``log p(request) + log p(j, k | request)`` per instance.
        entropy: Removal entropy plus the reinsertion entropy of the
            chosen request.
        removal_probs: ``(B, n)`` distribution over requests 1..n.
        reinsertion_probs: ``(B, N * N)`` distribution, entry ``j * N + k``.
        embeddings: Final encoder embeddings, None for hand-crafted policies.
    """

    action: ActionBatch
    log_prob: torch.Tensor
    entropy: torch.Tensor
    removal_probs: torch.Tensor
    reinsertion_probs: torch.Tensor
    embeddings: Optional[torch.Tensor] = None


def select(log_probs: torch.Tensor, mode: DecodeMode, generator: Optional[torch.Generator] = None) -> torch.Tensor:
    """Sample an index per row, or take the first maximum in greedy mode."""
    if mode == DecodeMode.GREEDY:
        return log_probs.argmax(dim=-1)
    return torch.multinomial(log_probs.exp(), 1, generator=generator).squeeze(1)


def decode(
    env: BatchedSearchEnv,
    removal_log_probs: Callable[[], torch.Tensor],
    reinsertion_log_probs: Callable[[torch.Tensor], torch.Tensor],
    mode: DecodeMode = DecodeMode.SAMPLE,
    generator: Optional[torch.Generator] = None,
    action: Optional[ActionBatch] = None,
    embeddings: Optional[torch.Tensor] = None,
) -> PolicyOutput:
    """Pick a request, then an anchor pair for it.

    With ``action`` given nothing is drawn; the output scores that action.
    """
    size = env.graph_size
    removal = removal_log_probs()
    request = action.request if action is not None else select(removal, mode, generator) + 1

    reinsertion = reinsertion_log_probs(request)
    if action is not None:
        anchors = action.after_pickup * size + action.after_delivery
    else:
        anchors = select(reinsertion, mode, generator)
        action = ActionBatch(request=request, after_pickup=anchors // size, after_delivery=anchors % size)

    log_prob = removal.gather(1, (request - 1).unsqueeze(1)).squeeze(1) + reinsertion.gather(1, anchors.unsqueeze(1)).squeeze(1)
    removal_probs, reinsertion_probs = removal.exp(), reinsertion.exp()
    entropy = torch.special.entr(removal_probs).sum(-1) + torch.special.entr(reinsertion_probs).sum(-1)
    return PolicyOutput(
        action=action,
        log_prob=log_prob,
        entropy=entropy,
        removal_probs=removal_probs,
        reinsertion_probs=reinsertion_probs,
        embeddings=embeddings,
    )


class N2SPolicy(nn.Module):
    """Encoder, max-pooling and the two decoders."""

    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.encoder = N2SEncoder(config)
        self.pooling = MaxPooling(config.node_dim)
        self.removal_decoder = RemovalDecoder(config.n_heads, config.node_dim)
        self.reinsertion_decoder = ReinsertionDecoder(config.n_heads, config.node_dim)

    def embed(self, env: BatchedSearchEnv) -> tuple[torch.Tensor, torch.Tensor]:
        """Final encoder embeddings and their pooled version."""
        embeddings = self.encoder(env.coords, env.positions).node_embeddings
        return embeddings, self.pooling(embeddings)

    def removal_log_probs(self, env: BatchedSearchEnv, pooled: torch.Tensor, logit_clip: float) -> torch.Tensor:
        logits = self.removal_decoder(
            pooled,
            env.pred_nodes(),
            env.succ_nodes(),
            env.history_counts(),
            env.recent_removals(),
            logit_clip,
        )
        return torch.log_softmax(logits, dim=-1)

    def reinsertion_log_probs(
        self,
        env: BatchedSearchEnv,
        pooled: torch.Tensor,
        request: torch.Tensor,
        logit_clip: float,
    ) -> torch.Tensor:
        logits = self.reinsertion_decoder(
            pooled,
            request,
            env.reduced_successors(request),
            env.reinsertion_mask(request),
            logit_clip,
        )
        return torch.log_softmax(logits, dim=-1)

    def forward(
        self,
        env: BatchedSearchEnv,
        mode: DecodeMode = DecodeMode.SAMPLE,
        generator: Optional[torch.Generator] = None,
        action: Optional[ActionBatch] = None,
        logit_clip: Optional[float] = None,
    ) -> PolicyOutput:
        clip = logit_clip if logit_clip is not None else self.config.logit_clip
        embeddings, pooled = self.embed(env)
        return decode(
            env,
            lambda: self.removal_log_probs(env, pooled, clip),
            lambda request: self.reinsertion_log_probs(env, pooled, request, clip),
            mode=mode,
            generator=generator,
            action=action,
            embeddings=embeddings,
        )


def count_parameters(module: nn.Module) -> int:
    """Trainable parameter count."""
    return sum(param.numel() for param in module.parameters() if param.requires_grad)
