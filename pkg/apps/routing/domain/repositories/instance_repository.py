"""Instance repository interface.

The file-system implementation lives in the infrastructure layer; the
application handlers only see this protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, Sequence

from ..value_objects.instance import Instance


@dataclass(frozen=True, slots=True)
class DatasetManifest:
    """What a dataset directory holds.

    Attributes:
        n: Request count shared by all instances.
        variant: Variant tag of the instances.
        seed: Base seed; instance ``i`` was drawn with ``seed + i``.
        files: Instance file names in dataset order.
        seeds: Per-instance seeds aligned with ``files`` (None if imported).
    """

    n: int
    variant: str
    seed: int | None
    files: tuple[str, ...]
    seeds: tuple[int | None, ...]

    @property
    def count(self) -> int:
        return len(self.files)


class InstanceRepository(Protocol):
    """Persistence of instances and datasets."""

    def save_instance(self, instance: Instance, path: Path) -> Path:
        """Write one instance file and return its path."""
        ...

    def load_instance(self, path: Path) -> Instance:
        """Read one instance file.

        Raises:
            InstanceParseError: On malformed lines.
            InstanceFormatError: On duplicate or missing node ids.
        """
        ...

    def save_dataset(
        self,
        instances: Sequence[Instance],
        directory: Path,
        seed: int | None = None,
        seeds: Sequence[int | None] | None = None,
    ) -> DatasetManifest:
        """Write instances plus a manifest into ``directory``."""
        ...

    def load_dataset(self, directory: Path) -> tuple[DatasetManifest, list[Instance]]:
        """Read a dataset in manifest order.

        Raises:
            DatasetNotFoundError: If the directory or manifest is missing.
        """
        ...
