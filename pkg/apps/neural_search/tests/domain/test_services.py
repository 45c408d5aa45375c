import itertools

import numpy as np
import pytest

from neural_search.domain.enums.search_enums import TransformOp
from neural_search.domain.errors import InvalidConfigError
from neural_search.domain.services.metrics import gap_percent, mean_gap_percent
from neural_search.domain.services.schedule import curriculum_steps, learning_rate_at
from neural_search.domain.services.transforms import (
    apply_transform,
    augment_count,
    augmentation_specs,
    random_transform_spec,
    transform_coords,
)
from neural_search.domain.value_objects.transform_spec import TransformSpec
from routing.domain.services.construction import generate_instance, random_initial_solution
from routing.domain.services.geometry import objective


def pairwise(coords):
    return np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)


class TestTransforms:
    def test_random_specs_are_isometries(self):
        rng = np.random.default_rng(0)
        instance = generate_instance(5, seed=3)
        route = random_initial_solution(instance, seed=3)

        for _ in range(100):
            spec = random_transform_spec(rng)
            copy = apply_transform(instance, spec)
            assert np.max(np.abs(pairwise(copy.coords) - pairwise(instance.coords))) < 1e-12
            assert objective(copy, route) == pytest.approx(objective(instance, route), abs=1e-9)

    def test_every_op_appears_once(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            assert sorted(op.value for op in random_transform_spec(rng).sequence) == sorted(op.value for op in TransformOp)

    def test_single_ops(self):
        coords = np.array([[0.2, 0.7]])

        def run(**flags):
            return transform_coords(coords, TransformSpec(**flags))[0]

        assert np.allclose(run(flip_xy=True), [0.7, 0.2])
        assert np.allclose(run(one_minus_x=True), [0.8, 0.7])
        assert np.allclose(run(one_minus_y=True), [0.2, 0.3])
        assert np.allclose(run(quarter_turns=1), [-0.7, 0.2])
        assert np.allclose(run(quarter_turns=2), [-0.2, -0.7])

    def test_order_matters(self):
        coords = np.array([[0.2, 0.7]])
        flip_first = TransformSpec(flip_xy=True, one_minus_x=True)
        flip_last = TransformSpec(
            sequence=(TransformOp.ONE_MINUS_X, TransformOp.FLIP_XY, TransformOp.ONE_MINUS_Y, TransformOp.ROTATE),
            flip_xy=True,
            one_minus_x=True,
        )

        assert np.allclose(transform_coords(coords, flip_first), [[0.3, 0.2]])
        assert np.allclose(transform_coords(coords, flip_last), [[0.7, 0.8]])

    @pytest.mark.parametrize("graph_size", [3, 7, 21, 51, 101])
    def test_copy_count(self, graph_size):
        specs = augmentation_specs(graph_size, np.random.default_rng(0), identity_first=True)

        assert len(specs) == augment_count(graph_size) == graph_size // 2
        assert specs[0].is_identity

    def test_identity_spec(self):
        spec = TransformSpec.identity()

        assert spec.is_identity
        assert str(spec) == "identity"
        with pytest.raises(InvalidConfigError):
            TransformSpec(quarter_turns=4)


class TestSchedules:
    @pytest.mark.parametrize("epoch, rho, steps", [(0, 2.0, 0), (1, 2.0, 1), (5, 2.0, 3), (3, 1.5, 2), (0, 1.0, 1), (199, 1.0, 200)])
    def test_curriculum(self, epoch, rho, steps):
        assert curriculum_steps(epoch, rho) == steps

    def test_learning_rate_decay(self):
        for epoch in range(10):
            assert learning_rate_at(8e-5, 0.985, epoch) == pytest.approx(8e-5 * 0.985**epoch, rel=1e-12, abs=0)

    def test_invalid_rho(self):
        with pytest.raises(InvalidConfigError):
            curriculum_steps(1, 0.0)


class TestGap:
    def test_values(self):
        assert gap_percent(11.0, 10.0) == pytest.approx(10.0)
        assert gap_percent(9.0, 10.0) == pytest.approx(-10.0)
        assert mean_gap_percent([11.0, 10.0], [10.0, 10.0]) == pytest.approx(5.0)

    @pytest.mark.parametrize("reference", [0.0, -1.0, float("inf")])
    def test_bad_reference(self, reference):
        with pytest.raises(InvalidConfigError):
            gap_percent(1.0, reference)

    def test_length_mismatch(self):
        with pytest.raises(InvalidConfigError):
            mean_gap_percent(list(itertools.repeat(1.0, 3)), [1.0])
