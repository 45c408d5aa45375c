"""State-value critic."""

from __future__ import annotations

import torch
from torch import nn

from ...domain.value_objects.model_config import ModelConfig
from .attention import MultiHeadAttention


class N2SCritic(nn.Module):
    """Value of a search state from the policy's final embeddings.

    One vanilla attention layer refines the embeddings, a mean-pooling
    layer mixes in the global average, and an MLP reads the max, the mean
    and the incumbent cost.
    """

    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        dim = config.node_dim
        self.attention = MultiHeadAttention(config.critic_heads, dim)
        self.W_local = nn.Linear(dim, dim // 2, bias=False)
        self.W_global = nn.Linear(dim, dim // 2, bias=False)
        self.value_head = nn.Sequential(
            nn.Linear(dim + 1, 128),
            nn.ReLU(inplace=True),
            nn.Linear(128, 64),
            nn.ReLU(inplace=True),
            nn.Linear(64, 1),
        )

    def forward(self, embeddings: torch.Tensor, best_cost: torch.Tensor) -> torch.Tensor:
        """Values ``(B,)``; pass embeddings detached from the policy graph."""
        y = self.attention(embeddings)
        pooled = self.W_local(y) + self.W_global(y.mean(dim=1, keepdim=True))
        features = torch.cat(
            (pooled.max(dim=1).values, pooled.mean(dim=1), best_cost.to(pooled.dtype).unsqueeze(-1)),
            dim=-1,
        )
        return self.value_head(features).squeeze(-1)
