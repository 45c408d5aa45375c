"""Problem variant enumeration."""

from __future__ import annotations

from enum import Enum, unique
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self


@unique
class ProblemVariant(Enum):
    """The two one-to-one pickup-and-delivery variants that are supported.

    PDTSP only requires every pickup to precede its delivery. PDTSP_LIFO
    additionally treats the vehicle as a rear-loaded stack.
    """

    PDTSP = "pdtsp"
    PDTSP_LIFO = "pdtsp-lifo"

    def __str__(self) -> str:
        """Return the string value of the variant."""
        return self.value

    def __repr__(self) -> str:
        """Return a detailed string representation."""
        return f"ProblemVariant.{self.name}"

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Create a ProblemVariant from a string value.

        Accepts the CLI spelling (``pdtsp-lifo``), the enum name
        (``PDTSP_LIFO``) and any case mix of both.

        Args:
            value: The string representation of the variant.

        Returns:
            ProblemVariant instance.

        Raises:
            ValueError: If the string doesn't match any variant.
        """
        normalized = value.strip().lower().replace("_", "-")
        try:
            return cls(normalized)
        except ValueError as e:
            valid_values = [variant.value for variant in cls]
            raise ValueError(
                f"Invalid problem variant: {value}. Valid values are: {valid_values}"
            ) from e

    @property
    def is_lifo(self) -> bool:
        """Check whether the stack-loading rule applies."""
        return self == ProblemVariant.PDTSP_LIFO
