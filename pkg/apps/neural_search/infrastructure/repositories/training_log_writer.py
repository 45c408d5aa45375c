"""Tab-separated training log, one row per batch."""

from __future__ import annotations

import csv
from pathlib import Path

from ...domain.value_objects.training_record import TrainingRecord

LOG_NAME = "train_log.tsv"


class TrainingLogWriter:
    """Append training records to ``<run dir>/train_log.tsv``.

    The header is written once, when the file is created; resumed runs keep
    appending below the existing rows.
    """

    def __init__(self, directory: Path) -> None:
        self.path = Path(directory) / LOG_NAME

    def append(self, record: TrainingRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        new_file = not self.path.exists()
        with self.path.open("a", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle, fieldnames=TrainingRecord.field_names(), delimiter="\t")
            if new_file:
                writer.writeheader()
            writer.writerow(record.to_dict())
