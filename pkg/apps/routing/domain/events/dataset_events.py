"""Routing domain events.

Events describe datasets that were written or imported so that the
application layer can log them without knowing the storage details.
"""

from __future__ import annotations

import uuid
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any


@dataclass(frozen=True, slots=True)
class DomainEvent(ABC):
    """Base class for routing domain events."""

    aggregate_id: str
    event_id: uuid.UUID = field(default_factory=uuid.uuid4)
    occurred_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
    event_version: int = field(default=1)

    @property
    @abstractmethod
    def event_type(self) -> str:
        """Return the type identifier for this event."""

    def _get_event_data(self) -> dict[str, Any]:
        return {}

    def to_dict(self) -> dict[str, Any]:
        return {
            "event_type": self.event_type,
            "event_id": str(self.event_id),
            "aggregate_id": self.aggregate_id,
            "occurred_at": self.occurred_at.isoformat(),
            "event_version": self.event_version,
            "data": self._get_event_data(),
        }


@dataclass(frozen=True, slots=True)
class DatasetGenerated(DomainEvent):
    """A random dataset was written to disk. ``aggregate_id`` is its path."""

    n: int = 0
    count: int = 0
    seed: int = 0
    variant: str = ""

    @property
    def event_type(self) -> str:
        return "routing.dataset_generated"

    def _get_event_data(self) -> dict[str, Any]:
        return {"n": self.n, "count": self.count, "seed": self.seed, "variant": self.variant}


@dataclass(frozen=True, slots=True)
class BenchmarkImported(DomainEvent):
    """A benchmark file was normalized and stored as an instance."""

    source: str = ""
    n: int = 0
    scale: float = 1.0

    @property
    def event_type(self) -> str:
        return "routing.benchmark_imported"

    def _get_event_data(self) -> dict[str, Any]:
        return {"source": self.source, "n": self.n, "scale": self.scale}
