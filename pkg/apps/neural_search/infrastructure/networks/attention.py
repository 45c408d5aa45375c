"""Attention layers of the encoder.

Weights are stored per head as ``(heads, input_dim, head_dim)`` tensors.
Attention scores are laid out ``(batch, heads, query, key)``.
"""

from __future__ import annotations

import math
from typing import Optional

import torch
from torch import nn

from ...domain.errors import ShapeError


def init_head_parameters(module: nn.Module) -> None:
    """Uniform init in ``[-1/sqrt(fan_in), 1/sqrt(fan_in)]`` for per-head weights."""
    for param in module.parameters(recurse=False):
        fan_in = param.size(1) if param.dim() == 3 else param.size(-1)
        bound = 1.0 / math.sqrt(fan_in)
        param.data.uniform_(-bound, bound)


class MultiHeadAttention(nn.Module):
    """Scaled dot-product self-attention over node embeddings."""

    def __init__(self, n_heads: int, input_dim: int, key_dim: Optional[int] = None, embed_dim: Optional[int] = None) -> None:
        super().__init__()
        embed_dim = embed_dim or input_dim
        key_dim = key_dim or input_dim // n_heads
        value_dim = embed_dim // n_heads

        self.n_heads = n_heads
        self.input_dim = input_dim
        self.key_dim = key_dim
        self.norm_factor = 1 / math.sqrt(key_dim)

        self.W_query = nn.Parameter(torch.empty(n_heads, input_dim, key_dim))
        self.W_key = nn.Parameter(torch.empty(n_heads, input_dim, key_dim))
        self.W_val = nn.Parameter(torch.empty(n_heads, input_dim, value_dim))
        self.W_out = nn.Parameter(torch.empty(n_heads, value_dim, embed_dim))
        init_head_parameters(self)

    def _check(self, h: torch.Tensor) -> None:
        if h.dim() != 3 or h.size(-1) != self.input_dim:
            raise ShapeError("node embeddings", f"(batch, nodes, {self.input_dim})", tuple(h.shape))

    def self_scores(self, h: torch.Tensor) -> torch.Tensor:
        """Compatibility of every node pair, ``(B, m, N, N)``."""
        queries = torch.einsum("bni,mik->bmnk", h, self.W_query)
        keys = torch.einsum("bni,mik->bmnk", h, self.W_key)
        return self.norm_factor * torch.matmul(queries, keys.transpose(-1, -2))

    def aggregate(self, attention: torch.Tensor, h: torch.Tensor) -> torch.Tensor:
        """Weight values by ``attention`` and project the heads back."""
        values = torch.einsum("bni,miv->bmnv", h, self.W_val)
        heads = torch.matmul(attention, values)
        return torch.einsum("bmnv,mve->bne", heads, self.W_out)

    def forward(self, h: torch.Tensor, aux_scores: Optional[torch.Tensor] = None) -> torch.Tensor:
        """Attend over ``h``; ``aux_scores`` is accepted and ignored."""
        self._check(h)
        return self.aggregate(torch.softmax(self.self_scores(h), dim=-1), h)


class SynthesisAttention(MultiHeadAttention):
    """Self-attention whose scores blend node and positional compatibilities.

    For every node pair the ``m`` self scores and the ``m`` auxiliary scores
    are concatenated and mapped to ``m`` synthesized scores by a small MLP.
    """

    def __init__(self, n_heads: int, input_dim: int, key_dim: Optional[int] = None, embed_dim: Optional[int] = None) -> None:
        super().__init__(n_heads, input_dim, key_dim, embed_dim)
        self.score_mixer = nn.Sequential(
            nn.Linear(2 * n_heads, 2 * n_heads),
            nn.ReLU(inplace=True),
            nn.Linear(2 * n_heads, n_heads),
        )

    def synthesized_scores(self, h: torch.Tensor, aux_scores: torch.Tensor) -> torch.Tensor:
        scores = self.self_scores(h)
        if aux_scores.shape != scores.shape:
            raise ShapeError("auxiliary scores", f"{tuple(scores.shape)}", tuple(aux_scores.shape))
        stacked = torch.cat((scores, aux_scores), dim=1).permute(0, 2, 3, 1)
        return self.score_mixer(stacked).permute(0, 3, 1, 2)

    def forward(self, h: torch.Tensor, aux_scores: Optional[torch.Tensor] = None) -> torch.Tensor:
        self._check(h)
        if aux_scores is None:
            raise ShapeError("auxiliary scores", "a (batch, heads, nodes, nodes) tensor", ())
        return self.aggregate(torch.softmax(self.synthesized_scores(h, aux_scores), dim=-1), h)


class AuxiliaryScores(nn.Module):
    """Per-head compatibilities between positional embeddings."""

    def __init__(self, n_heads: int, position_dim: int) -> None:
        super().__init__()
        key_dim = position_dim // n_heads
        self.norm_factor = 1 / math.sqrt(key_dim)
        self.W_query = nn.Parameter(torch.empty(n_heads, position_dim, key_dim))
        self.W_key = nn.Parameter(torch.empty(n_heads, position_dim, key_dim))
        init_head_parameters(self)

    def forward(self, g: torch.Tensor) -> torch.Tensor:
        queries = torch.einsum("bni,mik->bmnk", g, self.W_query)
        keys = torch.einsum("bni,mik->bmnk", g, self.W_key)
        return self.norm_factor * torch.matmul(queries, keys.transpose(-1, -2))


class Normalization(nn.Module):
    """Instance normalization of every channel across the nodes of one instance."""

    def __init__(self, embed_dim: int) -> None:
        super().__init__()
        self.normalizer = nn.InstanceNorm1d(embed_dim, affine=True)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.normalizer(x.transpose(1, 2)).transpose(1, 2)


class EncoderLayer(nn.Module):
    """Attention and feed-forward sublayers, each with a residual and normalization."""

    def __init__(self, n_heads: int, embed_dim: int, feed_forward_dim: int, key_dim: Optional[int] = None, synthesis: bool = True) -> None:
        super().__init__()
        attention_cls = SynthesisAttention if synthesis else MultiHeadAttention
        self.attention = attention_cls(n_heads, embed_dim, key_dim=key_dim)
        self.attention_norm = Normalization(embed_dim)
        self.feed_forward = nn.Sequential(
            nn.Linear(embed_dim, feed_forward_dim),
            nn.ReLU(inplace=True),
            nn.Linear(feed_forward_dim, embed_dim),
        )
        self.feed_forward_norm = Normalization(embed_dim)

    def forward(self, h: torch.Tensor, aux_scores: Optional[torch.Tensor] = None) -> torch.Tensor:
        h = self.attention_norm(h + self.attention(h, aux_scores))
        return self.feed_forward_norm(h + self.feed_forward(h))
