import csv
import json

import pytest

from neural_search.application.commands import EvaluatePolicyCommand, TrainModelCommand
from neural_search.application.errors import CheckpointError, ConfigurationError, ValidationError
from neural_search.application.service import NeuralSearchService
from neural_search.domain.enums.search_enums import DecoderKind
from neural_search.domain.events.search_events import EpochCompleted, EvaluationCompleted
from neural_search.infrastructure.container import InfrastructureContainer
from routing.application.commands import GenerateDatasetCommand
from routing.application.service import RoutingService
from routing.infrastructure.container import InfrastructureContainer as RoutingContainer

TINY_RUN = """\
GRAPH_SIZE=5
EPOCHS={epochs}
BATCHES_PER_EPOCH=1
BATCH_SIZE=2
N_STEP=2
T_TRAIN=4
PPO_EPOCHS=1
DIM=16
N_LAYERS=1
"""


@pytest.fixture
def service() -> NeuralSearchService:
    return InfrastructureContainer().get(NeuralSearchService)


@pytest.fixture
def dataset(tmp_path):
    out_dir = tmp_path / "ds"
    RoutingContainer().get(RoutingService).generate_dataset(
        GenerateDatasetCommand(n=2, count=3, seed=1, out_dir=out_dir, exact_reference=True)
    )
    return out_dir


def run_config(tmp_path, epochs=1, extra=""):
    path = tmp_path / f"run-{epochs}.env"
    path.write_text(TINY_RUN.format(epochs=epochs) + extra)
    return path


def collect(service, event_type):
    seen = []
    service.event_bus.subscribe(event_type, seen.append)
    return seen


class TestTrain:
    def test_trains_and_checkpoints(self, tmp_path, service):
        epochs = collect(service, EpochCompleted)

        run = service.train(TrainModelCommand(out_dir=tmp_path / "run", config_path=run_config(tmp_path), quiet=True))

        assert run.epochs_completed == 1
        assert [path.rsplit("/", 1)[-1] for path in run.checkpoints] == ["epoch-001.pt"]
        assert run.model["node_dim"] == 16
        assert run.config["grad_clip"] == 0.05
        assert run.parameters > 0
        assert len(epochs) == 1
        assert (tmp_path / "run" / "train_log.tsv").is_file()

    def test_dim_override(self, tmp_path, service):
        run = service.train(
            TrainModelCommand(out_dir=tmp_path / "run", config_path=run_config(tmp_path), dim=32, quiet=True)
        )

        assert (run.model["node_dim"], run.model["position_dim"]) == (32, 32)

    def test_resume_extends_a_finished_run(self, tmp_path, service):
        run_dir = tmp_path / "run"
        service.train(TrainModelCommand(out_dir=run_dir, config_path=run_config(tmp_path), dim=32, quiet=True))

        resumed = service.train(
            TrainModelCommand(out_dir=run_dir, config_path=run_config(tmp_path, 2), resume=run_dir, quiet=True)
        )

        assert resumed.epochs_completed == 2
        assert resumed.model["node_dim"] == 32
        assert (run_dir / "epoch-002.pt").is_file()
        assert len((run_dir / "train_log.tsv").read_text().splitlines()) == 3

    def test_unknown_config_keys(self, tmp_path, service):
        with pytest.raises(ConfigurationError) as excinfo:
            service.train(
                TrainModelCommand(out_dir=tmp_path / "run", config_path=run_config(tmp_path, extra="WIDTH=3\n"))
            )

        assert excinfo.value.keys == ["WIDTH"]

    def test_missing_checkpoint(self, tmp_path, service):
        (tmp_path / "empty").mkdir()

        with pytest.raises(CheckpointError):
            service.train(TrainModelCommand(out_dir=tmp_path / "run", resume=tmp_path / "empty"))


class TestEvaluate:
    def test_handcrafted_policy_with_references(self, tmp_path, service, dataset):
        seen = collect(service, EvaluationCompleted)

        report = service.evaluate(
            EvaluatePolicyCommand(
                dataset=dataset,
                removal=DecoderKind.RANDOM,
                reinsertion=DecoderKind.RANDOM,
                steps=200,
                reference_path=dataset / "reference.txt",
                out_path=tmp_path / "report.json",
                csv_path=tmp_path / "report.csv",
                quiet=True,
            )
        )

        assert len(report.results) == 3
        assert all(result.gap >= -1e-4 for result in report.results)
        assert json.loads((tmp_path / "report.json").read_text())["instances"] == 3
        with (tmp_path / "report.csv").open(newline="") as handle:
            assert len(list(csv.DictReader(handle))) == 3
        assert [event.instances for event in seen] == [3]

    def test_learned_policy_from_a_run_directory(self, tmp_path, service, dataset):
        run_dir = tmp_path / "run"
        service.train(TrainModelCommand(out_dir=run_dir, config_path=run_config(tmp_path), quiet=True))

        report = service.evaluate(
            EvaluatePolicyCommand(dataset=dataset, checkpoint=run_dir, steps=5, augment=True, quiet=True)
        )

        assert [result.augments for result in report.results] == [2, 2, 2]
        assert report.config["checkpoint_epoch"] == 1
        assert report.config["removal"] == "learned"

    def test_reference_count_mismatch(self, tmp_path, service, dataset):
        references = tmp_path / "ref.txt"
        references.write_text("1.0\n")

        with pytest.raises(ValidationError):
            service.evaluate(
                EvaluatePolicyCommand(
                    dataset=dataset,
                    removal=DecoderKind.RANDOM,
                    reinsertion=DecoderKind.RANDOM,
                    steps=1,
                    reference_path=references,
                )
            )

    def test_missing_checkpoint(self, tmp_path, service, dataset):
        with pytest.raises(CheckpointError):
            service.evaluate(EvaluatePolicyCommand(dataset=dataset, checkpoint=tmp_path / "epoch-009.pt", steps=1))
