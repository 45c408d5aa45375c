"""File-system implementation of the instance repository.

A dataset is a directory of instance files plus ``manifest.json``. The
manifest is written with sorted keys and no timestamps so regenerating
a dataset with the same arguments produces identical bytes.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Sequence

from ...domain.errors import DatasetNotFoundError, InstanceFormatError
from ...domain.repositories.instance_repository import DatasetManifest
from ...domain.value_objects.instance import Instance
from ..benchmark.instance_format import format_instance, read_instance_file

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class FileSystemInstanceRepository:
    """Store instances as text files and datasets as directories."""

    def save_instance(self, instance: Instance, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_instance(instance), encoding="utf-8")
        logger.debug(f"Wrote instance {instance.name or path.stem} to {path}")
        return path

    def load_instance(self, path: Path) -> Instance:
        return read_instance_file(Path(path))

    def save_dataset(
        self,
        instances: Sequence[Instance],
        directory: Path,
        seed: int | None = None,
        seeds: Sequence[int | None] | None = None,
    ) -> DatasetManifest:
        """Write ``instances`` in order and a manifest describing them.

        Args:
            instances: Instances sharing one request count.
            directory: Target directory, created when missing.
            seed: Base seed of a generated dataset.
            seeds: Per-instance seeds aligned with ``instances``.

        Returns:
            The manifest that was written.
        """
        if not instances:
            raise InstanceFormatError(str(directory), "a dataset needs at least one instance")
        sizes = {instance.n for instance in instances}
        if len(sizes) != 1:
            raise InstanceFormatError(str(directory), f"instances mix request counts {sorted(sizes)}")

        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        width = max(4, len(str(len(instances) - 1)))
        files: list[str] = []
        for index, instance in enumerate(instances):
            name = f"{instance.name}.txt" if instance.name else f"instance_{index:0{width}d}.txt"
            if name in files:
                raise InstanceFormatError(str(directory), f"two instances would be written to {name}")
            self.save_instance(instance, directory / name)
            files.append(name)

        manifest = DatasetManifest(
            n=instances[0].n,
            variant=instances[0].variant.value,
            seed=seed,
            files=tuple(files),
            seeds=tuple(seeds) if seeds is not None else tuple(None for _ in files),
        )
        (directory / MANIFEST_NAME).write_text(_manifest_to_json(manifest), encoding="utf-8")
        logger.info(f"Saved dataset of {manifest.count} instances (n={manifest.n}) to {directory}")
        return manifest

    def load_dataset(self, directory: Path) -> tuple[DatasetManifest, list[Instance]]:
        directory = Path(directory)
        manifest_path = directory / MANIFEST_NAME
        if not directory.is_dir() or not manifest_path.is_file():
            raise DatasetNotFoundError(str(manifest_path))

        manifest = _manifest_from_dict(json.loads(manifest_path.read_text(encoding="utf-8")))
        instances = [self.load_instance(directory / name) for name in manifest.files]
        mismatched = [inst.name for inst in instances if inst.n != manifest.n]
        if mismatched:
            raise InstanceFormatError(str(directory), f"instances {mismatched} disagree with manifest n={manifest.n}")
        logger.debug(f"Loaded {len(instances)} instances from {directory}")
        return manifest, instances


def _manifest_to_json(manifest: DatasetManifest) -> str:
    data: dict[str, Any] = {
        "n": manifest.n,
        "variant": manifest.variant,
        "seed": manifest.seed,
        "count": manifest.count,
        "instances": [
            {"file": name, "seed": seed} for name, seed in zip(manifest.files, manifest.seeds)
        ],
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _manifest_from_dict(data: dict[str, Any]) -> DatasetManifest:
    entries = data.get("instances", [])
    return DatasetManifest(
        n=int(data["n"]),
        variant=str(data["variant"]),
        seed=data.get("seed"),
        files=tuple(entry["file"] for entry in entries),
        seeds=tuple(entry.get("seed") for entry in entries),
    )
