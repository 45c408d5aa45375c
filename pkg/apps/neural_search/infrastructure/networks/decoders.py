"""Pooling and the removal/reinsertion decoders.

Both decoders return clamped logits ``C * tanh(x)``; the reinsertion
logits of infeasible anchor pairs are ``-inf``.
"""

from __future__ import annotations

import torch
from torch import nn

from .attention import init_head_parameters


def score_mlp(input_dim: int, hidden_dim: int = 32) -> nn.Sequential:
    """MLP(input, 32, 32, 1) with ReLU hidden layers and a linear output."""
    return nn.Sequential(
        nn.Linear(input_dim, hidden_dim),
        nn.ReLU(inplace=True),
        nn.Linear(hidden_dim, hidden_dim),
        nn.ReLU(inplace=True),
        nn.Linear(hidden_dim, 1),
    )


class MaxPooling(nn.Module):
    """h_i W_local + max_j(h_j) W_global."""

    def __init__(self, embed_dim: int) -> None:
        super().__init__()
        self.W_local = nn.Linear(embed_dim, embed_dim, bias=False)
        self.W_global = nn.Linear(embed_dim, embed_dim, bias=False)

    def forward(self, h: torch.Tensor) -> torch.Tensor:
        return self.W_local(h) + self.W_global(h.max(dim=1, keepdim=True).values)


def _gather_nodes(x: torch.Tensor, index: torch.Tensor) -> torch.Tensor:
    """Pick entries of ``x`` ``(B, m, N, ...)`` along the node axis by ``index`` ``(B, N')``."""
    shape = (x.size(0), x.size(1), index.size(1)) + tuple(x.shape[3:])
    index = index.view(index.size(0), 1, index.size(1), *([1] * (x.dim() - 3))).expand(shape)
    return x.gather(2, index)


class RemovalDecoder(nn.Module):
    """Score each request by how loosely its nodes sit between their neighbours.

    Per head and node ``i`` with tour neighbours ``pred`` and ``succ``:
    ``q(pred)k(i) + q(i)k(succ) - q(pred)k(succ)``. The pickup and delivery
    scores of a request, its removal count in the history window and three
    last-removed indicators go through an MLP to one logit per request.
    """

    def __init__(self, n_heads: int, embed_dim: int) -> None:
        super().__init__()
        key_dim = embed_dim // n_heads
        self.n_heads = n_heads
        self.W_query = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        self.W_key = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        init_head_parameters(self)
        self.score_mlp = score_mlp(2 * n_heads + 4)

    def node_scores(self, h: torch.Tensor, pred: torch.Tensor, succ: torch.Tensor) -> torch.Tensor:
        """Per-head closeness scores ``(B, m, N)``."""
        queries = torch.einsum("bni,mik->bmnk", h, self.W_query)
        keys = torch.einsum("bni,mik->bmnk", h, self.W_key)
        queries_pred = _gather_nodes(queries, pred)
        keys_succ = _gather_nodes(keys, succ)
        return (
            (queries_pred * keys).sum(-1)
            + (queries * keys_succ).sum(-1)
            - (queries_pred * keys_succ).sum(-1)
        )

    def forward(
        self,
        h: torch.Tensor,
        pred: torch.Tensor,
        succ: torch.Tensor,
        counts: torch.Tensor,
        recent: torch.Tensor,
        logit_clip: float,
    ) -> torch.Tensor:
        """Clamped logits ``(B, n)`` over requests 1..n.

        Args:
            h: Pooled embeddings ``(B, N, d)``.
            pred: Tour predecessor of every node ``(B, N)``.
            succ: Tour successor of every node ``(B, N)``.
            counts: Removals of each request in the history window ``(B, n)``.
            recent: Indicators of the last three removals ``(B, n, 3)``.
            logit_clip: C.
        """
        n = (h.size(1) - 1) // 2
        scores = self.node_scores(h, pred, succ).transpose(1, 2)
        features = torch.cat(
            (scores[:, 1 : n + 1], scores[:, n + 1 :], counts.unsqueeze(-1).to(h.dtype), recent.to(h.dtype)),
            dim=-1,
        )
        return logit_clip * torch.tanh(self.score_mlp(features).squeeze(-1))


class ReinsertionDecoder(nn.Module):
    """Score every anchor pair (j, k) for the removed request.

    ``mu_p[a, b]`` rates ``b`` as the node following ``a`` and
    ``mu_s[a, b]`` rates ``b`` as the node preceding ``a``. An MLP combines
    ``mu_p[i+, succ(j)]``, ``mu_p[i-, succ(k)]``, ``mu_s[i+, j]`` and
    ``mu_s[i-, k]``, with successors read in the reduced tour.
    """

    def __init__(self, n_heads: int, embed_dim: int) -> None:
        super().__init__()
        key_dim = embed_dim // n_heads
        self.n_heads = n_heads
        self.W_query_pred = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        self.W_key_pred = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        self.W_query_succ = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        self.W_key_succ = nn.Parameter(torch.empty(n_heads, embed_dim, key_dim))
        init_head_parameters(self)
        self.score_mlp = score_mlp(4 * n_heads)

    @staticmethod
    def _preferences(h: torch.Tensor, node: torch.Tensor, W_query: torch.Tensor, W_key: torch.Tensor) -> torch.Tensor:
        """Scores of ``node`` against every node, ``(B, m, N)``."""
        source = h.gather(1, node.view(-1, 1, 1).expand(-1, 1, h.size(-1))).squeeze(1)
        query = torch.einsum("bi,mik->bmk", source, W_query)
        keys = torch.einsum("bni,mik->bmnk", h, W_key)
        return torch.einsum("bmk,bmnk->bmn", query, keys)

    def forward(
        self,
        h: torch.Tensor,
        request: torch.Tensor,
        reduced_succ: torch.Tensor,
        mask: torch.Tensor,
        logit_clip: float,
    ) -> torch.Tensor:
        """Flattened logits ``(B, N * N)``, entry ``j * N + k``.

        Args:
            h: Pooled embeddings ``(B, N, d)``.
            request: Removed request per instance ``(B,)``.
            reduced_succ: Successor of each node in the reduced tour ``(B, N)``.
            mask: Feasible anchor pairs ``(B, N, N)``.
            logit_clip: C.
        """
        batch, size, _ = h.shape
        n = (size - 1) // 2
        pickup, delivery = request, request + n

        pred_pickup = self._preferences(h, pickup, self.W_query_pred, self.W_key_pred)
        pred_delivery = self._preferences(h, delivery, self.W_query_pred, self.W_key_pred)
        succ_pickup = self._preferences(h, pickup, self.W_query_succ, self.W_key_succ)
        succ_delivery = self._preferences(h, delivery, self.W_query_succ, self.W_key_succ)

        index = reduced_succ.unsqueeze(1).expand(-1, self.n_heads, -1)
        per_j = (pred_pickup.gather(2, index), succ_pickup)
        per_k = (pred_delivery.gather(2, index), succ_delivery)
        grid = (batch, size, size, self.n_heads)
        features = torch.cat(
            (
                per_j[0].transpose(1, 2).unsqueeze(2).expand(grid),
                per_k[0].transpose(1, 2).unsqueeze(1).expand(grid),
                per_j[1].transpose(1, 2).unsqueeze(2).expand(grid),
                per_k[1].transpose(1, 2).unsqueeze(1).expand(grid),
            ),
            dim=-1,
        )
        logits = logit_clip * torch.tanh(self.score_mlp(features).squeeze(-1))
        return logits.masked_fill(~mask, float("-inf")).view(batch, size * size)
