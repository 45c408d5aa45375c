from .file_instance_repository import MANIFEST_NAME, FileSystemInstanceRepository

__all__ = ["MANIFEST_NAME", "FileSystemInstanceRepository"]
