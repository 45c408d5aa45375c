"""Dataset and route Data Transfer Objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True, slots=True)
class DatasetDTO:
    """Flat description of a dataset on disk.

    Attributes:
        path: Dataset directory.
        n: Request count.
        count: Number of instances.
        variant: Variant tag.
        seed: Base seed, None for imported datasets.
        files: Instance file names in manifest order.
        reference_path: Reference-cost file when one was written.
    """

    path: str
    n: int
    count: int
    variant: str
    seed: Optional[int]
    files: tuple[str, ...]
    reference_path: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "path": self.path,
            "n": self.n,
            "count": self.count,
            "variant": self.variant,
            "seed": self.seed,
            "files": list(self.files),
            "reference_path": self.reference_path,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DatasetDTO:
        return cls(
            path=data["path"],
            n=int(data["n"]),
            count=int(data["count"]),
            variant=data["variant"],
            seed=data.get("seed"),
            files=tuple(data.get("files", ())),
            reference_path=data.get("reference_path"),
        )


@dataclass(frozen=True, slots=True)
class RouteDTO:
    """A route with its cost on normalized and raw geometry."""

    instance: str
    order: tuple[int, ...]
    cost: float
    raw_cost: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "order": list(self.order),
            "cost": self.cost,
            "raw_cost": self.raw_cost,
        }

    def __str__(self) -> str:
        return f"RouteDTO(instance={self.instance}, cost={self.cost:.6f})"
