import numpy as np
import pytest

from routing.domain.enums.problem_variant import ProblemVariant
from routing.domain.errors import InstanceFormatError, InstanceParseError
from routing.domain.services.construction import generate_instance
from routing.domain.services.geometry import objective
from routing.domain.value_objects.route import Route
from routing.infrastructure.benchmark.instance_format import (
    format_instance,
    load_benchmark_instance,
    parse_instance_text,
    read_instance_file,
)


def write(tmp_path, text, name="bench.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_unit_square_file_keeps_scale_one(tmp_path):
    path = write(tmp_path, "PDP 1\n0 0 0\n1 1 0\n2 1 1\n")

    instance = load_benchmark_instance(path)

    assert instance.scale == 1.0
    assert np.allclose(instance.coords, [[0, 0], [1, 0], [1, 1]])
    assert instance.name == "bench"


def test_scaled_file_denormalizes_costs(tmp_path):
    path = write(tmp_path, "PDP 2 pdtsp-lifo\n0 0 0\n1 100 0\n2 100 100\n3 0 100\n4 50 50\n")
    raw = np.array([[0, 0], [100, 0], [100, 100], [0, 100], [50, 50]], dtype=float)

    instance = load_benchmark_instance(path)
    route = Route(order=(0, 1, 3, 2, 4), n=2)
    raw_cost = sum(np.hypot(*(raw[b] - raw[a])) for a, b in zip(route.order, route.order[1:] + (0,)))

    assert instance.variant == ProblemVariant.PDTSP_LIFO
    assert instance.scale == pytest.approx(0.01)
    assert instance.denormalize_cost(objective(instance, route)) == pytest.approx(raw_cost, rel=1e-12)


def test_explicit_pairs_reorder_nodes(tmp_path):
    text = "PDP 2\n7 0 0\n3 0.1 0\n5 0.2 0\n9 0.3 0\n4 0.4 0\nPAIR 3 9\nPAIR 4 5\n"

    instance = load_benchmark_instance(write(tmp_path, text))

    xs = instance.coords[:, 0] / instance.coords[:, 0].max() * 0.4
    assert np.allclose(xs, [0.0, 0.1, 0.4, 0.3, 0.2])


def test_round_trip_reproduces_coordinates(tmp_path):
    instance = generate_instance(6, seed=5, variant=ProblemVariant.PDTSP_LIFO, name="rt")
    path = write(tmp_path, format_instance(instance), name="rt.txt")

    loaded = read_instance_file(path)

    assert loaded == instance
    assert np.max(np.abs(loaded.coords - instance.coords)) < 1e-9


@pytest.mark.parametrize(
    "text, line",
    [
        ("PDP x\n", 1),
        ("# comment\n\nPDP 1\n0 0 0\n1 a 0\n2 1 1\n", 5),
        ("PDP 1\n0 0 0\n1 0\n", 3),
        ("", 1),
    ],
    ids=["bad-header", "bad-number", "short-record", "empty"],
)
def test_parse_errors_report_line_numbers(text, line):
    with pytest.raises(InstanceParseError) as excinfo:
        parse_instance_text(text, "bench.txt")

    assert excinfo.value.line_number == line


def test_duplicate_ids_are_a_format_error(tmp_path):
    with pytest.raises(InstanceFormatError):
        load_benchmark_instance(write(tmp_path, "PDP 1\n0 0 0\n1 1 0\n1 1 1\n"))


def test_missing_nodes_are_a_format_error(tmp_path):
    with pytest.raises(InstanceFormatError):
        load_benchmark_instance(write(tmp_path, "PDP 2\n0 0 0\n1 1 0\n2 1 1\n"))
