"""Action history value object: the recent removal window."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import InvalidArgumentError


@dataclass(frozen=True, slots=True)
class ActionHistory:
    """The most recent ``window_size`` removal requests, oldest first.

    ``record`` returns a new history; the object itself never changes.
    """

    window_size: int
    window: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.window_size < 1:
            raise InvalidArgumentError("window_size", f"must be positive, got {self.window_size}")
        if len(self.window) > self.window_size:
            raise InvalidArgumentError("window", "holds more entries than the window size")

    def record(self, request: int) -> ActionHistory:
        """Append ``request`` and drop the oldest entry once the window is full."""
        window = (self.window + (request,))[-self.window_size:]
        return ActionHistory(window_size=self.window_size, window=window)

    def count(self, request: int) -> int:
        """c(i): how often ``request`` was removed within the window."""
        return self.window.count(request)

    def counts(self, n: int) -> list[int]:
        """Counts for requests ``0..n`` (index 0 is unused and stays 0)."""
        result = [0] * (n + 1)
        for request in self.window:
            result[request] += 1
        return result

    def last(self, steps_back: int) -> Optional[int]:
        """Request removed ``steps_back`` steps ago (1 = most recent), if any."""
        if steps_back < 1:
            raise InvalidArgumentError("steps_back", "must be at least 1")
        if steps_back > len(self.window):
            return None
        return self.window[-steps_back]

    @property
    def last3(self) -> tuple[Optional[int], Optional[int], Optional[int]]:
        return self.last(1), self.last(2), self.last(3)

    def __len__(self) -> int:
        return len(self.window)
