from .instance_repository import DatasetManifest, InstanceRepository

__all__ = ["DatasetManifest", "InstanceRepository"]
