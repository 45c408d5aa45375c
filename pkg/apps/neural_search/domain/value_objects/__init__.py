"""Neural search value objects."""

from .inference_config import InferenceConfig, inference_window
from .model_config import ModelConfig
from .train_config import SIZE_DEFAULTS, TrainConfig, size_defaults
from .training_record import TrainingRecord
from .transform_spec import TransformSpec

__all__ = [
    "InferenceConfig",
    "ModelConfig",
    "SIZE_DEFAULTS",
    "TrainConfig",
    "TrainingRecord",
    "TransformSpec",
    "inference_window",
    "size_defaults",
]
