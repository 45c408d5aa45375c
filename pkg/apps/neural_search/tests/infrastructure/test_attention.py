import math

import pytest
import torch

from neural_search.domain.errors import ShapeError
from neural_search.infrastructure.networks.attention import (
    AuxiliaryScores,
    EncoderLayer,
    MultiHeadAttention,
    SynthesisAttention,
)

HEADS, DIM, NODES = 4, 16, 7


@pytest.fixture(autouse=True)
def seeded():
    torch.manual_seed(0)


def random_inputs(batch=2, dtype=torch.float64):
    return torch.randn(batch, NODES, DIM, dtype=dtype), torch.randn(batch, HEADS, NODES, NODES, dtype=dtype)


def loop_attention(layer, h):
    """Per-head, per-instance matrix products."""
    batch = h.size(0)
    out = torch.zeros(batch, NODES, DIM, dtype=h.dtype)
    for b in range(batch):
        for m in range(HEADS):
            q = h[b] @ layer.W_query[m]
            k = h[b] @ layer.W_key[m]
            v = h[b] @ layer.W_val[m]
            weights = torch.softmax(q @ k.T / math.sqrt(layer.key_dim), dim=-1)
            out[b] += weights @ v @ layer.W_out[m]
    return out


def test_multi_head_matches_matmul_oracle():
    layer = MultiHeadAttention(HEADS, DIM).double()
    h, _ = random_inputs()

    assert torch.allclose(layer(h), loop_attention(layer, h), atol=1e-6)


def test_attention_rows_are_distributions():
    layer = SynthesisAttention(HEADS, DIM).double()
    h, aux = random_inputs()

    rows = torch.softmax(layer.synthesized_scores(h, aux), dim=-1).sum(-1)

    assert torch.allclose(rows, torch.ones_like(rows), atol=1e-6)


def test_synthesis_is_permutation_equivariant():
    layer = SynthesisAttention(HEADS, DIM).double()
    h, aux = random_inputs()
    perm = torch.randperm(NODES)

    out = layer(h, aux)
    permuted = layer(h[:, perm], aux[:, :, perm][:, :, :, perm])

    assert torch.allclose(permuted, out[:, perm], atol=1e-5)


def test_encoder_layer_is_permutation_equivariant():
    layer = EncoderLayer(HEADS, DIM, 4 * DIM).double()
    h, aux = random_inputs()
    perm = torch.randperm(NODES)

    assert torch.allclose(layer(h[:, perm], aux[:, :, perm][:, :, :, perm]), layer(h, aux)[:, perm], atol=1e-5)


def test_pass_through_mixer_reduces_to_vanilla():
    vanilla = MultiHeadAttention(HEADS, DIM).double()
    synth = SynthesisAttention(HEADS, DIM).double()
    for name in ("W_query", "W_key", "W_val", "W_out"):
        getattr(synth, name).data.copy_(getattr(vanilla, name).data)
    eye = torch.eye(HEADS, dtype=torch.float64)
    zeros = torch.zeros(HEADS, HEADS, dtype=torch.float64)
    first, _, second = synth.score_mixer
    with torch.no_grad():
        first.weight.copy_(torch.cat((torch.cat((eye, zeros), 1), torch.cat((-eye, zeros), 1)), 0))
        first.bias.zero_()
        second.weight.copy_(torch.cat((eye, -eye), 1))
        second.bias.zero_()
    h, aux = random_inputs()

    assert torch.allclose(synth(h, aux), vanilla(h), atol=1e-5)


def test_auxiliary_scores_match_bilinear_oracle():
    scores = AuxiliaryScores(HEADS, DIM).double()
    g = torch.randn(2, NODES, DIM, dtype=torch.float64)

    expected = torch.stack(
        [(g @ scores.W_query[m]) @ (g @ scores.W_key[m]).transpose(1, 2) for m in range(HEADS)], dim=1
    ) / math.sqrt(DIM // HEADS)

    assert torch.allclose(scores(g), expected, atol=1e-5)


def test_init_bounds():
    layer = MultiHeadAttention(HEADS, 128)

    assert layer.W_query.abs().max().item() <= 1 / math.sqrt(128)
    assert layer.W_out.abs().max().item() <= 1 / math.sqrt(32)


def test_shape_errors():
    layer = SynthesisAttention(HEADS, DIM)
    h, aux = random_inputs(dtype=torch.float32)

    with pytest.raises(ShapeError):
        layer(h[..., :8], aux)
    with pytest.raises(ShapeError):
        layer(h)
    with pytest.raises(ShapeError):
        layer(h, aux[:, :2])
