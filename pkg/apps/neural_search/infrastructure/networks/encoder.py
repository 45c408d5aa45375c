"""The N2S encoder: node embeddings refined by stacked attention layers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import torch
from torch import nn

from ...domain.enums.search_enums import EncoderVariant
from ...domain.errors import ShapeError
from ...domain.value_objects.model_config import ModelConfig
from .attention import AuxiliaryScores, EncoderLayer
from .embeddings import NodeFeatureEmbedding, cyclic_positional_encoding


@dataclass(frozen=True)
class EncoderOutput:
    """Final node embeddings ``(B, N, d_h)`` and the cached auxiliary scores.

    ``aux_scores`` is ``(B, m, N, N)`` for the synthesis encoder and None
    for the vanilla one.
    """

    node_embeddings: torch.Tensor
    aux_scores: Optional[torch.Tensor]


class N2SEncoder(nn.Module):
    """Embed coordinates and tour positions and run ``L`` encoder layers.

    Node ``x`` receives the encoding row of its position in the tour. The
    auxiliary scores are computed once and shared by every layer.
    """

    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.synthesis = config.encoder_variant == EncoderVariant.SYNTH
        self.node_embedding = NodeFeatureEmbedding(config.node_dim)
        self.aux_scores = AuxiliaryScores(config.n_heads, config.position_dim) if self.synthesis else None
        self.layers = nn.ModuleList(
            EncoderLayer(
                config.n_heads,
                config.node_dim,
                config.feed_forward_dim,
                key_dim=config.key_dim,
                synthesis=self.synthesis,
            )
            for _ in range(config.n_layers)
        )
        self._tables: dict[tuple[int, torch.dtype, torch.device], torch.Tensor] = {}

    def positional_embeddings(self, positions: torch.Tensor, dtype: torch.dtype) -> torch.Tensor:
        """Rows of the cyclic encoding indexed by each node's tour position."""
        graph_size = positions.size(1)
        key = (graph_size, dtype, positions.device)
        if key not in self._tables:
            self._tables[key] = cyclic_positional_encoding(
                graph_size, self.config.position_dim, dtype=dtype, device=positions.device
            )
        return self._tables[key][positions]

    def forward(self, coords: torch.Tensor, positions: torch.Tensor) -> EncoderOutput:
        if coords.dim() != 3 or coords.size(-1) != 2:
            raise ShapeError("coords", "(batch, nodes, 2)", tuple(coords.shape))
        if positions.shape != coords.shape[:2]:
            raise ShapeError("positions", f"{tuple(coords.shape[:2])}", tuple(positions.shape))

        h = self.node_embedding(coords)
        aux = None
        if self.aux_scores is not None:
            aux = self.aux_scores(self.positional_embeddings(positions, coords.dtype))
        for layer in self.layers:
            h = layer(h, aux)
        return EncoderOutput(node_embeddings=h, aux_scores=aux)
