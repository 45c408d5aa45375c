import pytest

from routing.application.commands import (
    GenerateDatasetCommand,
    ImportBenchmarkCommand,
    PlotRouteCommand,
    SolveExactCommand,
)
from routing.application.errors import DatasetNotFoundError, InfeasibleRouteError, InstanceInputError, ValidationError
from routing.application.event_bus import EventBus
from routing.application.handlers.generate_dataset import REFERENCE_NAME
from routing.application.service import RoutingService
from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.events.dataset_events import BenchmarkImported, DatasetGenerated
from routing.infrastructure.benchmark.instance_format import load_benchmark_instance
from routing.infrastructure.plotting.route_plotter import plot_route
from routing.infrastructure.repositories.file_instance_repository import FileSystemInstanceRepository


@pytest.fixture
def bus():
    return EventBus()


@pytest.fixture
def service(bus):
    return RoutingService(
        instance_repository=FileSystemInstanceRepository(),
        benchmark_loader=load_benchmark_instance,
        plotter=plot_route,
        event_bus=bus,
    )


def collect(bus, event_type):
    seen = []
    bus.subscribe(event_type, seen.append)
    return seen


class TestGenerateDataset:
    def test_writes_named_instances_and_publishes(self, tmp_path, service, bus):
        seen = collect(bus, DatasetGenerated)

        dataset = service.generate_dataset(GenerateDatasetCommand(n=2, count=3, seed=7, out_dir=tmp_path / "ds"))

        assert dataset.count == 3
        assert dataset.files == ("pdp5_0000.txt", "pdp5_0001.txt", "pdp5_0002.txt")
        assert dataset.reference_path is None
        assert [(event.n, event.count, event.seed) for event in seen] == [(2, 3, 7)]

    def test_exact_reference_matches_solve_exact(self, tmp_path, service):
        dataset = service.generate_dataset(
            GenerateDatasetCommand(
                n=2,
                count=2,
                seed=0,
                out_dir=tmp_path / "ds",
                variant=ProblemVariant.PDTSP_LIFO,
                exact_reference=True,
            )
        )
        solved = service.solve_exact(SolveExactCommand(dataset_dir=tmp_path / "ds", out_path=tmp_path / "ref.txt"))

        generated = (tmp_path / "ds" / REFERENCE_NAME).read_text().split()
        assert dataset.reference_path == str(tmp_path / "ds" / REFERENCE_NAME)
        assert [float(cost) for cost in generated] == pytest.approx([route.raw_cost for route in solved.routes])

    def test_same_command_writes_same_bytes(self, tmp_path, service):
        for name in ("a", "b"):
            service.generate_dataset(GenerateDatasetCommand(n=3, count=2, seed=4, out_dir=tmp_path / name))

        for path in (tmp_path / "a").iterdir():
            assert path.read_bytes() == (tmp_path / "b" / path.name).read_bytes()

    def test_invalid_count_is_rejected_by_the_command(self, tmp_path):
        with pytest.raises(ValueError):
            GenerateDatasetCommand(n=2, count=0, seed=0, out_dir=tmp_path)


class TestSolveExact:
    def test_missing_dataset(self, tmp_path, service):
        with pytest.raises(DatasetNotFoundError):
            service.solve_exact(SolveExactCommand(dataset_dir=tmp_path / "missing", out_path=tmp_path / "ref.txt"))

    def test_too_large_for_brute_force(self, tmp_path, service):
        service.generate_dataset(GenerateDatasetCommand(n=6, count=1, seed=0, out_dir=tmp_path / "ds"))

        with pytest.raises(ValidationError):
            service.solve_exact(SolveExactCommand(dataset_dir=tmp_path / "ds", out_path=tmp_path / "ref.txt"))


class TestImportBenchmark:
    def test_import_records_scale(self, tmp_path, service, bus):
        seen = collect(bus, BenchmarkImported)
        source = tmp_path / "raw.txt"
        source.write_text("PDP 1\n0 0 0\n1 200 0\n2 200 200\n")

        dataset = service.import_benchmark(ImportBenchmarkCommand(sources=(source,), out_dir=tmp_path / "ds"))

        assert dataset.count == 1
        assert [event.scale for event in seen] == [pytest.approx(1 / 200)]

    def test_malformed_file_is_reported(self, tmp_path, service):
        source = tmp_path / "raw.txt"
        source.write_text("PDP 1\n0 0 0\n1 zero 0\n2 1 1\n")

        with pytest.raises(InstanceInputError) as excinfo:
            service.import_benchmark(ImportBenchmarkCommand(sources=(source,), out_dir=tmp_path / "ds"))

        assert excinfo.value.details["line_number"] == 3


class TestPlotRoute:
    @pytest.fixture
    def instance_path(self, tmp_path, service):
        service.generate_dataset(GenerateDatasetCommand(n=3, count=1, seed=11, out_dir=tmp_path / "ds"))
        return tmp_path / "ds" / "pdp7_0000.txt"

    def test_feasible_route_is_drawn(self, tmp_path, service, instance_path):
        result = service.plot_route(
            PlotRouteCommand(instance_path=instance_path, order=(0, 1, 2, 4, 5, 3, 6), out_path=tmp_path / "r.png")
        )

        assert result.image_path.is_file()
        assert result.route.cost == pytest.approx(result.route.raw_cost)

    def test_infeasible_route_reports_position(self, tmp_path, service, instance_path):
        with pytest.raises(InfeasibleRouteError) as excinfo:
            service.plot_route(
                PlotRouteCommand(
                    instance_path=instance_path,
                    order=(0, 1, 2, 4, 5, 3, 6),
                    out_path=tmp_path / "r.png",
                    variant=ProblemVariant.PDTSP_LIFO,
                )
            )

        assert excinfo.value.position == 3
