"""Torch networks of the N2S policy and critic."""

from .critic import N2SCritic
from .embeddings import NodeFeatureEmbedding, cyclic_positional_encoding
from .encoder import EncoderOutput, N2SEncoder
from .handcrafted import HandcraftedPolicy
from .policy import N2SPolicy, PolicyOutput, count_parameters

__all__ = [
    "EncoderOutput",
    "HandcraftedPolicy",
    "N2SCritic",
    "N2SEncoder",
    "N2SPolicy",
    "NodeFeatureEmbedding",
    "PolicyOutput",
    "count_parameters",
    "cyclic_positional_encoding",
]
