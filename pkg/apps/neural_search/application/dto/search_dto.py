"""Evaluation and training Data Transfer Objects."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

CSV_FIELDS = ("instance", "steps", "augments", "cost", "raw_cost", "reference", "gap", "time")


@dataclass(frozen=True, slots=True)
class InstanceResult:
    """Search outcome for one instance.

    Attributes:
        instance: Instance name.
        steps: Improvement steps taken.
        augments: Augmented copies searched; 0 for a plain rollout.
        cost: Best cost on normalized coordinates.
        raw_cost: Best cost on the original geometry.
        route: Best route, depot first.
        time: Wall time attributed to the instance, in seconds.
        reference: Reference cost when one was given.
        gap: Percent gap of ``raw_cost`` to ``reference``.
    """

    instance: str
    steps: int
    augments: int
    cost: float
    raw_cost: float
    route: tuple[int, ...]
    time: float
    reference: Optional[float] = None
    gap: Optional[float] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "steps": self.steps,
            "augments": self.augments,
            "cost": self.cost,
            "raw_cost": self.raw_cost,
            "route": list(self.route),
            "time": self.time,
            "reference": self.reference,
            "gap": self.gap,
        }

    def csv_row(self) -> dict[str, Any]:
        data = self.to_dict()
        return {name: data[name] for name in CSV_FIELDS}


@dataclass(frozen=True, slots=True)
class EvalReport:
    """Evaluation over a dataset.

    Attributes:
        results: Per-instance outcomes in dataset order.
        total_steps: Steps summed over instances and augmented copies.
        wall_time: Seconds for the whole evaluation.
        config: Echo of the resolved evaluation settings.
    """

    results: tuple[InstanceResult, ...]
    total_steps: int
    wall_time: float
    config: dict[str, Any] = field(default_factory=dict)

    @property
    def mean_cost(self) -> float:
        if not self.results:
            return 0.0
        return sum(result.raw_cost for result in self.results) / len(self.results)

    @property
    def mean_gap(self) -> Optional[float]:
        """Mean percent gap, or None when no references were given."""
        gaps = [result.gap for result in self.results if result.gap is not None]
        if not gaps or len(gaps) != len(self.results):
            return None
        return sum(gaps) / len(gaps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config,
            "instances": len(self.results),
            "mean_cost": self.mean_cost,
            "mean_gap": self.mean_gap,
            "total_steps": self.total_steps,
            "wall_time": self.wall_time,
            "results": [result.to_dict() for result in self.results],
        }

    def csv_rows(self) -> list[dict[str, Any]]:
        return [result.csv_row() for result in self.results]

    def __str__(self) -> str:
        gap = f", mean gap {self.mean_gap:.2f}%" if self.mean_gap is not None else ""
        return f"EvalReport({len(self.results)} instances, mean cost {self.mean_cost:.4f}{gap})"


@dataclass(frozen=True, slots=True)
class TrainingRunDTO:
    """What a training run left on disk.

    Attributes:
        out_dir: Run directory.
        epochs_completed: Epoch counter after the run.
        checkpoints: Checkpoint files written by this run.
        config: Resolved training configuration.
        model: Model configuration.
        parameters: Trainable parameters of the policy.
        last_epoch: Metrics of the final epoch, if any ran.
    """

    out_dir: str
    epochs_completed: int
    checkpoints: tuple[str, ...]
    config: dict[str, Any]
    model: dict[str, Any]
    parameters: int
    last_epoch: Optional[dict[str, float]] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "out_dir": self.out_dir,
            "epochs_completed": self.epochs_completed,
            "checkpoints": list(self.checkpoints),
            "config": self.config,
            "model": self.model,
            "parameters": self.parameters,
            "last_epoch": self.last_epoch,
        }
