"""Checkpoint files written with ``torch.save``.

A run directory holds ``epoch-XXX.pt`` files; the number is the count of
completed epochs, so the latest checkpoint sorts last.
"""

from __future__ import annotations

import logging
import pickle
import re
from pathlib import Path
from typing import Any, Optional

import torch

from ...domain.errors import CheckpointFormatError, CheckpointNotFoundError

logger = logging.getLogger(__name__)

CHECKPOINT_PATTERN = re.compile(r"^epoch-(\d+)\.pt$")
REQUIRED_KEYS = ("version", "model_config", "train_config", "policy", "critic", "optimizers", "epoch", "rng")
SUPPORTED_VERSIONS = (1,)


def checkpoint_name(epoch: int) -> str:
    return f"epoch-{epoch:03d}.pt"


class TorchCheckpointRepository:
    """Store training state dictionaries as torch pickles.

    Args:
        map_location: Device tensors are loaded onto.
    """

    def __init__(self, map_location: str = "cpu") -> None:
        self._map_location = map_location

    def save(self, state: dict[str, Any], directory: Path, epoch: int) -> Path:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / checkpoint_name(epoch)
        torch.save(state, path)
        logger.info(f"Saved checkpoint {path}")
        return path

    def latest(self, directory: Path) -> Optional[Path]:
        """Checkpoint with the highest epoch number in ``directory``."""
        found = [
            (int(match.group(1)), path)
            for path in Path(directory).iterdir()
            if (match := CHECKPOINT_PATTERN.match(path.name))
        ]
        return max(found)[1] if found else None

    def load(self, path: Path) -> dict[str, Any]:
        """Read a checkpoint file, or the latest one in a run directory.

        Raises:
            CheckpointNotFoundError: If nothing is found at ``path``.
            CheckpointFormatError: If the file is not a training checkpoint.
        """
        path = Path(path)
        if path.is_dir():
            latest = self.latest(path)
            if latest is None:
                raise CheckpointNotFoundError(str(path))
            path = latest
        if not path.is_file():
            raise CheckpointNotFoundError(str(path))

        try:
            state = torch.load(path, map_location=self._map_location, weights_only=False)
        except (pickle.UnpicklingError, RuntimeError, EOFError, ValueError) as e:
            raise CheckpointFormatError(str(path), f"unreadable: {e}") from e

        if not isinstance(state, dict):
            raise CheckpointFormatError(str(path), "not a state dictionary")
        missing = [key for key in REQUIRED_KEYS if key not in state]
        if missing:
            raise CheckpointFormatError(str(path), f"missing keys {', '.join(missing)}")
        if state["version"] not in SUPPORTED_VERSIONS:
            raise CheckpointFormatError(str(path), f"unsupported version {state['version']}")
        logger.debug(f"Loaded checkpoint {path} at epoch {state['epoch']}")
        return state
