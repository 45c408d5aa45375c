import pytest

from routing.domain.errors import DatasetNotFoundError, InstanceFormatError
from routing.domain.services.construction import generate_instance
from routing.infrastructure.repositories.file_instance_repository import MANIFEST_NAME, FileSystemInstanceRepository


@pytest.fixture
def repository():
    return FileSystemInstanceRepository()


def test_dataset_round_trip(tmp_path, repository):
    instances = [generate_instance(3, seed=s, name=f"pdp7_{s}") for s in range(4)]

    manifest = repository.save_dataset(instances, tmp_path / "ds", seed=0, seeds=list(range(4)))
    loaded_manifest, loaded = repository.load_dataset(tmp_path / "ds")

    assert manifest.count == 4
    assert loaded_manifest == manifest
    assert loaded == instances
    assert (tmp_path / "ds" / MANIFEST_NAME).is_file()


def test_rewriting_is_byte_identical(tmp_path, repository):
    instances = [generate_instance(2, seed=s, name=f"i{s}") for s in range(3)]
    repository.save_dataset(instances, tmp_path / "a", seed=0)
    repository.save_dataset(instances, tmp_path / "b", seed=0)

    for path in sorted((tmp_path / "a").iterdir()):
        assert path.read_bytes() == (tmp_path / "b" / path.name).read_bytes()


def test_missing_dataset(tmp_path, repository):
    with pytest.raises(DatasetNotFoundError):
        repository.load_dataset(tmp_path / "nowhere")


def test_mixed_sizes_are_refused(tmp_path, repository):
    with pytest.raises(InstanceFormatError):
        repository.save_dataset([generate_instance(1, seed=0), generate_instance(2, seed=0)], tmp_path)
