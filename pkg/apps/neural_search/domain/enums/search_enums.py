"""Enumerations for encoders, decoders and action selection."""

from __future__ import annotations

from enum import Enum, unique
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self


class _ChoiceEnum(Enum):
    """Enum with a forgiving ``from_string`` for CLI and config values."""

    def __str__(self) -> str:
        return str(self.value)

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Parse ``value`` case-insensitively; underscores and hyphens are equal.

        Raises:
            ValueError: If no member matches.
        """
        normalized = value.strip().lower().replace("_", "-")
        for member in cls:
            if member.value == normalized:
                return member
        valid_values = [member.value for member in cls]
        raise ValueError(f"Invalid {cls.__name__}: {value}. Valid values are: {valid_values}")


@unique
class EncoderVariant(_ChoiceEnum):
    """Attention used inside the encoder stack.

    SYNTH blends node and positional attention scores through a small MLP.
    VANILLA attends over node embeddings only and ignores positions.
    """

    SYNTH = "synth"
    VANILLA = "vanilla"


@unique
class DecoderKind(_ChoiceEnum):
    """Where the removal or reinsertion choice comes from."""

    LEARNED = "learned"
    RANDOM = "random"
    EPS_GREEDY = "eps-greedy"

    @property
    def is_handcrafted(self) -> bool:
        return self != DecoderKind.LEARNED


@unique
class DecodeMode(_ChoiceEnum):
    """Sample from the action distribution or take its argmax."""

    SAMPLE = "sample"
    GREEDY = "greedy"


@unique
class TransformOp(_ChoiceEnum):
    """Isometries of the plane used to augment an instance."""

    FLIP_XY = "flip-xy"
    ONE_MINUS_X = "one-minus-x"
    ONE_MINUS_Y = "one-minus-y"
    ROTATE = "rotate"
