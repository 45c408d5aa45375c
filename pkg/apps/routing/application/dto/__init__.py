"""Routing Data Transfer Objects."""

from .dataset_dto import DatasetDTO, RouteDTO

__all__ = ["DatasetDTO", "RouteDTO"]
