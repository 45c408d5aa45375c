"""``KEY=VALUE`` run configuration files.

Keys name fields of ``TrainConfig`` or ``ModelConfig`` (case-insensitive);
``DIM`` sets both embedding widths. Values are coerced to the field types;
``none`` clears an optional setting so it is resolved from the graph size.
"""

from __future__ import annotations

import logging
import typing
from dataclasses import fields
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from dotenv import dotenv_values

from ..domain.errors import InvalidConfigError, UnknownConfigKeysError
from ..domain.value_objects.model_config import ModelConfig
from ..domain.value_objects.train_config import TrainConfig

logger = logging.getLogger(__name__)

_NONE = {"", "none", "null"}
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _coerce(name: str, raw: Optional[str], annotation: Any) -> Any:
    value = (raw or "").strip()
    args = typing.get_args(annotation)
    if type(None) in args:
        if value.lower() in _NONE:
            return None
        annotation = next(arg for arg in args if arg is not type(None))
    try:
        if isinstance(annotation, type) and issubclass(annotation, Enum):
            return annotation.from_string(value)  # type: ignore[attr-defined]
        if annotation is bool:
            if value.lower() in _TRUE:
                return True
            if value.lower() in _FALSE:
                return False
            raise ValueError(f"not a boolean: {value!r}")
        if annotation is int:
            return int(value)
        if annotation is float:
            return float(value)
    except ValueError as e:
        raise InvalidConfigError(name, str(e)) from e
    return value


def parse_run_config(values: dict[str, Optional[str]]) -> tuple[TrainConfig, ModelConfig]:
    """Build both configurations from raw key/value pairs.

    Raises:
        UnknownConfigKeysError: Listing every key that names no field.
        InvalidConfigError: If a value cannot be coerced or breaks a constraint.
    """
    train_hints = typing.get_type_hints(TrainConfig)
    model_hints = typing.get_type_hints(ModelConfig)
    train_fields = {f.name for f in fields(TrainConfig)}
    model_fields = {f.name for f in fields(ModelConfig)}

    train_values: dict[str, Any] = {}
    model_values: dict[str, Any] = {}
    unknown: list[str] = []
    for key, raw in values.items():
        name = key.strip().lower()
        if name == "dim":
            width = _coerce(name, raw, int)
            model_values.setdefault("node_dim", width)
            model_values.setdefault("position_dim", width)
        elif name in train_fields:
            train_values[name] = _coerce(name, raw, train_hints[name])
        elif name in model_fields:
            model_values[name] = _coerce(name, raw, model_hints[name])
        else:
            unknown.append(key)
    if unknown:
        raise UnknownConfigKeysError(unknown)
    return TrainConfig(**train_values), ModelConfig(**model_values)


def load_run_config(path: Optional[Path]) -> tuple[TrainConfig, ModelConfig]:
    """Read a run configuration file; defaults when ``path`` is None.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
    """
    if path is None:
        return TrainConfig(), ModelConfig()
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"run configuration not found: {path}")
    logger.debug(f"Reading run configuration {path}")
    return parse_run_config(dotenv_values(path))
