from .report_writer import FileReportWriter
from .torch_checkpoint_repository import TorchCheckpointRepository
from .training_log_writer import TrainingLogWriter

__all__ = ["FileReportWriter", "TorchCheckpointRepository", "TrainingLogWriter"]
