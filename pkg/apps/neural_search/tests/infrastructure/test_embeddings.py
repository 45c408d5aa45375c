import math

import pytest
import torch

from neural_search.infrastructure.networks.embeddings import (
    NodeFeatureEmbedding,
    cyclic_periods,
    cyclic_positional_encoding,
)


def test_first_position():
    table = cyclic_positional_encoding(21, 16, dtype=torch.float64)

    assert torch.allclose(table[0, 0::2], torch.zeros(8, dtype=torch.float64), atol=1e-9)
    assert torch.allclose(table[0, 1::2], torch.ones(8, dtype=torch.float64), atol=1e-9)


def test_full_cycle_dimensions_reach_minus_one():
    table = cyclic_positional_encoding(8, 8, dtype=torch.float64)

    assert cyclic_periods(8, 8)[4:] == [8.0] * 4
    assert table[4, 5].item() == pytest.approx(-1.0, abs=1e-9)
    assert table[2, 4].item() == pytest.approx(-1.0, abs=1e-9)


@pytest.mark.parametrize("graph_size, dim", [(7, 16), (21, 128), (101, 64)])
def test_bounded_and_distinct(graph_size, dim):
    table = cyclic_positional_encoding(graph_size, dim, dtype=torch.float64)

    assert table.shape == (graph_size, dim)
    assert table.abs().max().item() <= 1.0 + 1e-12
    assert torch.unique(table.round(decimals=9), dim=0).size(0) == graph_size


def test_periods_grow_towards_graph_size():
    periods = cyclic_periods(101, 64)

    base = 101 ** (1 / 32)
    assert periods[0] == pytest.approx((101 - base) / 64 + base)
    assert all(a <= b for a, b in zip(periods[:32], periods[1:32]))
    assert periods[:3] == [periods[0]] * 3
    assert max(periods) == 101


def test_odd_width_is_refused():
    with pytest.raises(ValueError):
        cyclic_positional_encoding(7, 15)


def test_triangle_wave_spot_value():
    graph_size, dim = 10, 4
    period = cyclic_periods(graph_size, dim)[0]
    z = 3 / graph_size * period * math.ceil(graph_size / period)
    expected = math.sin(2 * math.pi / period * abs(math.fmod(z, 2 * period) - period))

    assert cyclic_positional_encoding(graph_size, dim, dtype=torch.float64)[3, 0].item() == pytest.approx(expected, abs=1e-12)


def test_node_embedding_is_one_shared_affine_map():
    torch.manual_seed(3)
    embedding = NodeFeatureEmbedding(4).double()
    with torch.no_grad():
        embedding.project.weight.copy_(torch.tensor([[1.0, 0.0], [0.0, 1.0], [1.0, -1.0], [2.0, 3.0]]))
        embedding.project.bias.copy_(torch.tensor([0.0, 0.5, -1.0, 0.25]))
    coords = torch.tensor([[[0.2, 0.4], [1.0, 0.0], [0.5, 0.5]]], dtype=torch.float64)

    out = embedding(coords)

    expected = torch.tensor(
        [[[0.2, 0.9, -1.2, 1.85], [1.0, 0.5, 0.0, 2.25], [0.5, 1.0, -1.0, 2.75]]],
        dtype=torch.float64,
    )
    assert torch.allclose(out, expected, atol=1e-12)
