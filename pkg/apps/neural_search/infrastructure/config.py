"""Infrastructure settings for the Neural Search context.

Reads the runs directory, torch device and inference defaults from Django
settings, with dataclass defaults when a setting is absent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional


@dataclass(frozen=True)
class RuntimeConfig:
    """Where networks run and how environments are built."""

    device: str = "cpu"
    env_dtype: str = "float32"


@dataclass(frozen=True)
class StorageConfig:
    """Where training runs are written by default."""

    runs_dir: Path = Path("runs")


@dataclass(frozen=True)
class EvaluationDefaults:
    """Fallbacks for evaluation flags."""

    steps: int = 1000
    batch_size: int = 64
    epsilon: float = 0.1


@dataclass(frozen=True)
class SearchInfrastructureConfig:
    """Combined neural search infrastructure configuration."""

    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)
    storage: StorageConfig = field(default_factory=StorageConfig)
    evaluation: EvaluationDefaults = field(default_factory=EvaluationDefaults)

    @classmethod
    def from_django_settings(cls, settings: Optional[Any] = None) -> SearchInfrastructureConfig:
        """Create configuration from Django settings.

        Args:
            settings: Django settings object. If None, imports from django.conf.

        Returns:
            SearchInfrastructureConfig instance.
        """
        if settings is None:
            try:
                from django.conf import settings as django_settings
                settings = django_settings
            except ImportError:
                return cls.default()

        n2s = getattr(settings, 'N2S', {}) or {}
        return cls(
            runtime=RuntimeConfig(
                device=str(n2s.get('DEVICE', RuntimeConfig.device)),
                env_dtype=str(n2s.get('ENV_DTYPE', RuntimeConfig.env_dtype)),
            ),
            storage=StorageConfig(runs_dir=Path(getattr(settings, 'N2S_RUNS_DIR', StorageConfig.runs_dir))),
            evaluation=EvaluationDefaults(
                steps=int(n2s.get('EVAL_STEPS', EvaluationDefaults.steps)),
                batch_size=int(n2s.get('EVAL_BATCH_SIZE', EvaluationDefaults.batch_size)),
                epsilon=float(n2s.get('EPSILON', EvaluationDefaults.epsilon)),
            ),
        )

    @classmethod
    def default(cls) -> SearchInfrastructureConfig:
        return cls()


_config: Optional[SearchInfrastructureConfig] = None


def get_config() -> SearchInfrastructureConfig:
    """Get the global neural search infrastructure configuration."""
    global _config
    if _config is None:
        _config = SearchInfrastructureConfig.from_django_settings()
    return _config


def set_config(config: SearchInfrastructureConfig) -> None:
    """Set the global neural search infrastructure configuration."""
    global _config
    _config = config
