from .dataset_events import BenchmarkImported, DatasetGenerated, DomainEvent

__all__ = ["BenchmarkImported", "DatasetGenerated", "DomainEvent"]
