"""Infrastructure settings for the Routing context.

Reads the data directory and plot options from Django settings, with
dataclass defaults when a setting is absent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional


@dataclass(frozen=True)
class StorageConfig:
    """Where datasets live by default."""

    data_dir: Path = Path("data")


@dataclass(frozen=True)
class PlotConfig:
    """Route figure options."""

    dpi: int = 120


@dataclass(frozen=True)
class InfrastructureConfig:
    """Combined routing infrastructure configuration."""

    storage: StorageConfig = field(default_factory=StorageConfig)
    plot: PlotConfig = field(default_factory=PlotConfig)

    @classmethod
    def from_django_settings(cls, settings: Optional[Any] = None) -> InfrastructureConfig:
        """Create configuration from Django settings.

        Args:
            settings: Django settings object. If None, imports from django.conf.

        Returns:
            InfrastructureConfig instance.
        """
        if settings is None:
            try:
                from django.conf import settings as django_settings
                settings = django_settings
            except ImportError:
                return cls.default()

        n2s = getattr(settings, 'N2S', {}) or {}
        return cls(
            storage=StorageConfig(data_dir=Path(getattr(settings, 'N2S_DATA_DIR', StorageConfig.data_dir))),
            plot=PlotConfig(dpi=int(n2s.get('PLOT_DPI', PlotConfig.dpi))),
        )

    @classmethod
    def default(cls) -> InfrastructureConfig:
        return cls()


_config: Optional[InfrastructureConfig] = None


def get_config() -> InfrastructureConfig:
    """Get the global routing infrastructure configuration."""
    global _config
    if _config is None:
        _config = InfrastructureConfig.from_django_settings()
    return _config


def set_config(config: InfrastructureConfig) -> None:
    """Set the global routing infrastructure configuration."""
    global _config
    _config = config
