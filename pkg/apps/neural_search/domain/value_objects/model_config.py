"""Model configuration value object."""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace
from typing import Any

from ..enums.search_enums import EncoderVariant
from ..errors import InvalidConfigError


@dataclass(frozen=True, slots=True)
class ModelConfig:
    """Architecture of the policy and critic networks.

    Attributes:
        node_dim: Width of node feature embeddings.
        position_dim: Width of positional feature embeddings.
        n_heads: Attention heads.
        n_layers: Stacked encoder layers.
        logit_clip: Decoder logits are squashed into ``[-logit_clip, logit_clip]``.
        encoder_variant: Synthesis attention or the vanilla ablation.
        critic_heads: Heads of the critic's attention layer.
    """

    node_dim: int = 128
    position_dim: int = 128
    n_heads: int = 4
    n_layers: int = 3
    logit_clip: float = 6.0
    encoder_variant: EncoderVariant = EncoderVariant.SYNTH
    critic_heads: int = 4

    def __post_init__(self) -> None:
        if self.n_heads < 1 or self.critic_heads < 1:
            raise InvalidConfigError("n_heads", "at least one attention head is required")
        if self.node_dim % self.n_heads or self.node_dim % self.critic_heads:
            raise InvalidConfigError("node_dim", f"{self.node_dim} is not divisible by the head count")
        if self.position_dim % self.n_heads:
            raise InvalidConfigError("position_dim", f"{self.position_dim} is not divisible by {self.n_heads} heads")
        if self.position_dim % 2:
            raise InvalidConfigError("position_dim", "the cyclic encoding needs an even width")
        if self.node_dim % 2:
            raise InvalidConfigError("node_dim", "the critic halves the embedding width, use an even value")
        if self.n_layers < 1:
            raise InvalidConfigError("n_layers", "at least one encoder layer is required")
        if not self.logit_clip > 0:
            raise InvalidConfigError("logit_clip", f"must be positive, got {self.logit_clip}")

    @property
    def key_dim(self) -> int:
        """Per-head query and key width: position width over heads."""
        return self.position_dim // self.n_heads

    @property
    def value_dim(self) -> int:
        """Per-head value width: node width over heads."""
        return self.node_dim // self.n_heads

    @property
    def feed_forward_dim(self) -> int:
        return 4 * self.node_dim

    def with_dim(self, dim: int) -> ModelConfig:
        """Same architecture with both embedding widths set to ``dim``."""
        return replace(self, node_dim=dim, position_dim=dim)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["encoder_variant"] = self.encoder_variant.value
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ModelConfig:
        values = dict(data)
        if "encoder_variant" in values and not isinstance(values["encoder_variant"], EncoderVariant):
            values["encoder_variant"] = EncoderVariant.from_string(str(values["encoder_variant"]))
        return cls(**values)
