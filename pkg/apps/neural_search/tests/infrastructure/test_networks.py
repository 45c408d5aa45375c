import pytest
import torch
from torch.func import functional_call

from neural_search.domain.enums.search_enums import DecodeMode, EncoderVariant
from neural_search.domain.value_objects.model_config import ModelConfig
from neural_search.infrastructure.environment.batched_env import ActionBatch
from neural_search.infrastructure.networks import N2SCritic, N2SEncoder, N2SPolicy, count_parameters
from neural_search.infrastructure.networks.attention import MultiHeadAttention
from neural_search.infrastructure.networks.decoders import MaxPooling, ReinsertionDecoder, RemovalDecoder

from ..conftest import make_env, random_instances


class TestParameterCounts:
    """Counting boundary: encoder, pooling and both decoders; the critic is excluded."""

    @pytest.mark.parametrize("dim, expected", [(64, 0.19e6), (128, 0.76e6)])
    def test_totals(self, dim, expected):
        policy = N2SPolicy(ModelConfig().with_dim(dim))

        assert abs(count_parameters(policy) - expected) <= 0.1 * expected

    @pytest.mark.parametrize("dim", [64, 128])
    def test_synthesis_over_vanilla_ratio(self, dim):
        synth = count_parameters(N2SPolicy(ModelConfig().with_dim(dim)))
        vanilla = count_parameters(N2SPolicy(ModelConfig(encoder_variant=EncoderVariant.VANILLA).with_dim(dim)))

        assert synth / vanilla == pytest.approx(1.06, abs=0.02)

    def test_exact_count_at_128(self):
        assert count_parameters(N2SPolicy(ModelConfig())) == 760_966
        assert count_parameters(N2SPolicy(ModelConfig(encoder_variant=EncoderVariant.VANILLA))) == 727_874


def test_encoder_output_shapes(tiny_model_config, encoder_variant):
    config = ModelConfig.from_dict({**tiny_model_config.to_dict(), "encoder_variant": encoder_variant.value})
    encoder = N2SEncoder(config)
    coords = torch.rand(3, 7, 2)
    positions = torch.stack([torch.randperm(7) for _ in range(3)])

    output = encoder(coords, positions)

    assert output.node_embeddings.shape == (3, 7, 16)
    assert (output.aux_scores is None) == (encoder_variant == EncoderVariant.VANILLA)


def test_policy_distributions(tiny_model_config, problem_variant):
    torch.manual_seed(0)
    policy = N2SPolicy(tiny_model_config).double()
    env = make_env(random_instances(3, 4, variant=problem_variant))

    output = policy(env)
    mask = env.reinsertion_mask(output.action.request).flatten(1)

    assert torch.allclose(output.removal_probs.sum(-1), torch.ones(4, dtype=torch.float64), atol=1e-6)
    assert torch.allclose(output.reinsertion_probs.sum(-1), torch.ones(4, dtype=torch.float64), atol=1e-6)
    assert bool((output.reinsertion_probs[~mask] == 0).all())
    chosen = output.action.after_pickup * 7 + output.action.after_delivery
    assert bool(mask.gather(1, chosen.unsqueeze(1)).all())


def test_greedy_picks_the_argmax(tiny_model_config):
    torch.manual_seed(1)
    policy = N2SPolicy(tiny_model_config).double()
    env = make_env(random_instances(3, 2))

    output = policy(env, DecodeMode.GREEDY)

    assert torch.equal(output.action.request - 1, output.removal_probs.argmax(-1))


def test_scoring_a_given_action_reproduces_its_log_prob(tiny_model_config):
    torch.manual_seed(2)
    policy = N2SPolicy(tiny_model_config).double()
    env = make_env(random_instances(3, 3))
    generator = torch.Generator().manual_seed(0)

    sampled = policy(env, generator=generator)
    scored = policy(env, action=sampled.action)

    assert torch.allclose(sampled.log_prob, scored.log_prob, atol=1e-12)


def _gradcheck(module, names, call):
    """Finite-difference check of ``call`` with respect to the named parameters."""
    params = dict(module.named_parameters())
    chosen = tuple(params[name].detach().clone().requires_grad_(True) for name in names)

    def run(*values):
        return call(lambda *args: functional_call(module, {**params, **dict(zip(names, values))}, args))

    assert torch.autograd.gradcheck(run, chosen, eps=1e-6, atol=1e-5, rtol=1e-3)


def test_encoder_gradients(tiny_model_config):
    torch.manual_seed(3)
    encoder = N2SEncoder(tiny_model_config).double()
    coords = torch.rand(1, 7, 2, dtype=torch.float64)
    positions = torch.randperm(7).unsqueeze(0)
    names = [name for name in dict(encoder.named_parameters()) if ".attention." in name] + ["aux_scores.W_query"]

    _gradcheck(encoder, names, lambda forward: forward(coords, positions).node_embeddings)


def test_policy_log_prob_gradients(tiny_model_config):
    torch.manual_seed(4)
    policy = N2SPolicy(tiny_model_config).double()
    env = make_env(random_instances(3, 2, seed=5))
    action = policy(env, generator=torch.Generator().manual_seed(0)).action.detach()
    names = [name for name in dict(policy.named_parameters()) if "decoder.W_" in name]

    _gradcheck(policy, names, lambda forward: forward(env, DecodeMode.SAMPLE, None, action).log_prob)


def test_critic_value_gradients(tiny_model_config):
    torch.manual_seed(5)
    critic = N2SCritic(tiny_model_config).double()
    embeddings = torch.randn(2, 7, 16, dtype=torch.float64)
    best_cost = torch.rand(2, dtype=torch.float64)
    names = [name for name in dict(critic.named_parameters()) if name.startswith("W_") or ".W_" in name]

    _gradcheck(critic, names, lambda forward: forward(embeddings, best_cost))


def test_critic_reads_the_incumbent_cost(tiny_model_config):
    torch.manual_seed(6)
    critic = N2SCritic(tiny_model_config)
    embeddings = torch.randn(2, 7, 16)

    values = critic(embeddings, torch.tensor([1.0, 1.0]))
    shifted = critic(embeddings, torch.tensor([5.0, 5.0]))

    assert values.shape == (2,)
    assert not torch.allclose(values, shifted)


def test_scores_a_given_action(tiny_model_config):
    policy = N2SPolicy(tiny_model_config)
    env = make_env(random_instances(3, 2), dtype=torch.float32)
    action = ActionBatch(torch.tensor([1, 2]), torch.tensor([0, 0]), torch.tensor([0, 0]))

    output = policy(env, action=action)

    assert torch.equal(output.action.request, action.request)
    assert torch.isfinite(output.log_prob).all()


def _encoder(tiny_model_config, variant):
    config = ModelConfig.from_dict({**tiny_model_config.to_dict(), "encoder_variant": variant.value})
    return N2SEncoder(config).double()


class TestEncoderPositions:
    coords = torch.rand(2, 7, 2, generator=torch.Generator().manual_seed(11), dtype=torch.float64)
    positions = torch.arange(7).repeat(2, 1)
    shuffled = torch.tensor([[0, 3, 1, 6, 2, 5, 4], [0, 6, 5, 4, 3, 2, 1]])

    def test_synthesis_output_follows_the_tour(self, tiny_model_config):
        torch.manual_seed(12)
        encoder = _encoder(tiny_model_config, EncoderVariant.SYNTH)

        first = encoder(self.coords, self.positions).node_embeddings
        again = encoder(self.coords, self.positions).node_embeddings
        moved = encoder(self.coords, self.shuffled).node_embeddings

        assert torch.equal(first, again)
        assert not torch.allclose(first, moved)

    def test_vanilla_ignores_positions(self, tiny_model_config):
        torch.manual_seed(12)
        encoder = _encoder(tiny_model_config, EncoderVariant.VANILLA)

        first = encoder(self.coords, self.positions).node_embeddings
        moved = encoder(self.coords, self.shuffled).node_embeddings

        assert torch.allclose(first, moved, atol=1e-12)

    def test_vanilla_attention_ignores_auxiliary_scores(self):
        torch.manual_seed(13)
        attention = MultiHeadAttention(4, 16).double()
        h = torch.randn(2, 7, 16, dtype=torch.float64)

        assert torch.equal(attention(h), attention(h, torch.randn(2, 4, 7, 7, dtype=torch.float64)))


class TestMaxPooling:
    def test_equal_rows(self):
        torch.manual_seed(14)
        pooling = MaxPooling(8).double()
        row = torch.randn(8, dtype=torch.float64)
        h = row.expand(2, 5, 8)

        expected = row @ (pooling.W_local.weight + pooling.W_global.weight).T

        assert torch.allclose(pooling(h), expected.expand(2, 5, 8), atol=1e-12)

    def test_zero_global_projection_is_local_only(self):
        torch.manual_seed(15)
        pooling = MaxPooling(8).double()
        with torch.no_grad():
            pooling.W_global.weight.zero_()
        h = torch.randn(2, 5, 8, dtype=torch.float64)

        assert torch.allclose(pooling(h), h @ pooling.W_local.weight.T, atol=1e-12)


def _zeroed(module):
    with torch.no_grad():
        for parameter in module.parameters():
            parameter.zero_()
    return module


def _removal_inputs(batch=2, n=3, dim=16, scale=1.0):
    size = 2 * n + 1
    order = torch.stack([torch.randperm(size) for _ in range(batch)])
    pred, succ = torch.empty_like(order), torch.empty_like(order)
    pred.scatter_(1, order, order.roll(1, dims=1))
    succ.scatter_(1, order, order.roll(-1, dims=1))
    h = scale * torch.randn(batch, size, dim, dtype=torch.float64)
    counts = torch.randint(0, 3, (batch, n))
    recent = torch.randint(0, 2, (batch, n, 3))
    return h, pred, succ, counts, recent


class TestDecoderLogits:
    def test_zero_removal_weights_give_a_uniform_distribution(self):
        torch.manual_seed(16)
        decoder = _zeroed(RemovalDecoder(4, 16).double())

        logits = decoder(*_removal_inputs(n=3), logit_clip=6.0)

        assert torch.allclose(torch.softmax(logits, dim=-1), torch.full((2, 3), 1 / 3, dtype=torch.float64), atol=1e-12)

    def test_removal_logits_stay_within_the_clip(self):
        torch.manual_seed(17)
        decoder = RemovalDecoder(4, 16).double()

        for _ in range(20):
            logits = decoder(*_removal_inputs(n=4, scale=50.0), logit_clip=2.0)

            assert logits.abs().max().item() <= 2.0

    def test_zero_reinsertion_weights_are_uniform_over_feasible_pairs(self):
        torch.manual_seed(18)
        decoder = _zeroed(ReinsertionDecoder(4, 16).double())
        size = 7
        h = torch.randn(2, size, 16, dtype=torch.float64)
        mask = torch.rand(2, size, size) > 0.6
        mask[:, 0, 0] = True
        reduced_succ = torch.arange(size).roll(-1).repeat(2, 1)

        logits = decoder(h, torch.tensor([1, 2]), reduced_succ, mask, logit_clip=6.0)
        probs = torch.softmax(logits, dim=-1).view(2, size, size)

        feasible = mask.to(torch.float64)
        assert torch.allclose(probs, feasible / feasible.sum(dim=(1, 2), keepdim=True), atol=1e-12)


def test_critic_value_head_reads_pooled_width_plus_the_cost():
    critic = N2SCritic(ModelConfig())

    assert critic.value_head[0].in_features == 129
    assert isinstance(critic.attention, MultiHeadAttention)
    assert not any(isinstance(module, torch.nn.InstanceNorm1d) for module in critic.modules())
