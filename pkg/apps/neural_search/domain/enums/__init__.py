"""Neural search enumerations."""

from .search_enums import DecodeMode, DecoderKind, EncoderVariant, TransformOp

__all__ = ["DecodeMode", "DecoderKind", "EncoderVariant", "TransformOp"]
