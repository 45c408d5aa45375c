import pytest

from neural_search.domain.enums.search_enums import DecodeMode, DecoderKind, EncoderVariant
from neural_search.domain.errors import InvalidConfigError
from neural_search.domain.value_objects.inference_config import InferenceConfig, inference_window
from neural_search.domain.value_objects.model_config import ModelConfig
from neural_search.domain.value_objects.train_config import TrainConfig, size_defaults
from routing.domain.enums.problem_variant import ProblemVariant


class TestSizeDefaults:
    @pytest.mark.parametrize(
        "graph_size, expected",
        [(11, (0.05, 2.0)), (21, (0.05, 2.0)), (41, (0.15, 1.5)), (51, (0.15, 1.5)), (101, (0.35, 1.0)), (201, (0.35, 1.0))],
    )
    def test_lookup(self, graph_size, expected):
        assert size_defaults(graph_size) == expected

    def test_resolved_fills_only_unset_fields(self):
        config = TrainConfig(graph_size=21, grad_clip=0.5).resolved()

        assert config.grad_clip == 0.5
        assert config.curriculum_rho == 2.0
        assert config.history_window == 21


class TestTrainConfig:
    def test_defaults(self):
        config = TrainConfig()

        assert (config.epochs, config.batch_size, config.n_step, config.t_train, config.ppo_epochs) == (200, 600, 5, 250, 3)
        assert (config.clip_epsilon, config.lr_policy, config.lr_critic) == (0.1, 8e-5, 2e-5)
        assert (config.lr_decay, config.gamma) == (0.985, 0.999)
        assert config.n_requests == 10
        assert config.segments_per_batch == 50

    @pytest.mark.parametrize(
        "overrides",
        [{"graph_size": 20}, {"graph_size": 1}, {"t_train": 12, "n_step": 5}, {"gamma": 0.0}, {"clip_epsilon": 1.0}, {"grad_clip": 0.0}],
    )
    def test_invalid(self, overrides):
        with pytest.raises(InvalidConfigError):
            TrainConfig(**overrides)

    def test_dict_round_trip(self):
        config = TrainConfig(graph_size=11, variant=ProblemVariant.PDTSP_LIFO, curriculum_rho=1.5)

        assert TrainConfig.from_dict(config.to_dict()) == config
        assert config.to_dict()["variant"] == "pdtsp-lifo"


class TestModelConfig:
    def test_derived_widths(self):
        config = ModelConfig()

        assert (config.key_dim, config.value_dim, config.feed_forward_dim) == (32, 32, 512)
        assert config.with_dim(64).node_dim == config.with_dim(64).position_dim == 64

    @pytest.mark.parametrize("overrides", [{"node_dim": 126}, {"position_dim": 30, "n_heads": 3}, {"n_layers": 0}, {"logit_clip": 0}])
    def test_invalid(self, overrides):
        with pytest.raises(InvalidConfigError):
            ModelConfig(**overrides)

    def test_dict_round_trip(self):
        config = ModelConfig(node_dim=16, position_dim=16, encoder_variant=EncoderVariant.VANILLA)

        assert ModelConfig.from_dict(config.to_dict()) == config


class TestInferenceConfig:
    @pytest.mark.parametrize("graph_size, window", [(3, 1), (7, 3), (21, 10), (101, 50)])
    def test_default_window(self, graph_size, window):
        assert inference_window(graph_size) == window
        assert InferenceConfig().window_for(graph_size) == window

    def test_explicit_window_wins(self):
        assert InferenceConfig(history_window=4).window_for(101) == 4

    def test_echo_uses_plain_values(self):
        data = InferenceConfig(mode=DecodeMode.GREEDY).to_dict()

        assert data["mode"] == "greedy"
        assert data["steps"] == 1000

    @pytest.mark.parametrize("overrides", [{"steps": -1}, {"batch_size": 0}, {"logit_clip": -1.0}])
    def test_invalid(self, overrides):
        with pytest.raises(InvalidConfigError):
            InferenceConfig(**overrides)


@pytest.mark.parametrize("text, member", [("eps_greedy", DecoderKind.EPS_GREEDY), ("LEARNED", DecoderKind.LEARNED)])
def test_enum_parsing(text, member):
    assert DecoderKind.from_string(text) is member
    assert DecoderKind.EPS_GREEDY.is_handcrafted


def test_unknown_enum_value():
    with pytest.raises(ValueError, match="Valid values"):
        DecodeMode.from_string("beam")
