"""Node feature embeddings and the cyclic positional encoding."""

from __future__ import annotations

import math

import torch
from torch import nn


class NodeFeatureEmbedding(nn.Module):
    """One affine map shared by all nodes: h_i = l(x_i) W + b."""

    def __init__(self, node_dim: int, input_dim: int = 2) -> None:
        super().__init__()
        self.project = nn.Linear(input_dim, node_dim)

    def forward(self, coords: torch.Tensor) -> torch.Tensor:
        return self.project(coords)


def cyclic_periods(graph_size: int, dim: int) -> list[float]:
    """Period T_d of every encoding dimension.

    The first half of the dimensions sweep periods from about
    ``|V| ** (1 / (dim // 2))`` up towards ``|V|`` in groups of three; the
    remaining dimensions all use the full cycle length ``|V|``.
    """
    half = dim // 2
    base = graph_size ** (1.0 / half)
    periods = []
    for d in range(dim):
        if d < half:
            periods.append((3 * (d // 3) + 1) / dim * (graph_size - base) + base)
        else:
            periods.append(float(graph_size))
    return periods


def cyclic_positional_encoding(
    graph_size: int,
    dim: int,
    dtype: torch.dtype = torch.float32,
    device: torch.device | str | None = None,
) -> torch.Tensor:
    """Encoding table of shape ``(graph_size, dim)``; row ``i`` is position ``i``.

    Each dimension is a triangle wave of period ``2 T_d`` fed through sin
    (even dimensions) or cos (odd dimensions), so position ``|V|`` would
    coincide with position 0 for the dimensions whose period is ``|V|``.
    """
    if graph_size < 1:
        raise ValueError(f"graph_size must be positive, got {graph_size}")
    if dim % 2:
        raise ValueError(f"dim must be even, got {dim}")

    positions = torch.arange(graph_size, dtype=torch.float64)
    table = torch.empty(graph_size, dim, dtype=torch.float64)
    for d, period in enumerate(cyclic_periods(graph_size, dim)):
        omega = 2 * math.pi / period
        z = positions / graph_size * period * math.ceil(graph_size / period)
        phase = omega * torch.abs(torch.remainder(z, 2 * period) - period)
        table[:, d] = torch.sin(phase) if d % 2 == 0 else torch.cos(phase)
    return table.to(dtype=dtype, device=device)
