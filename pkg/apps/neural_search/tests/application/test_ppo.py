import math

import numpy as np
import pytest
import torch

from neural_search.application.trainer import (
    clipped_value_loss,
    collect_segment,
    compute_returns_and_advantages,
    curriculum_warmup,
    ppo_surrogate,
    ppo_update,
)
from neural_search.domain.errors import NonFiniteLossError
from neural_search.domain.value_objects.train_config import TrainConfig
from neural_search.infrastructure.networks import N2SCritic, N2SPolicy
from routing.domain.services.moves import apply_action
from routing.domain.value_objects.pair_action import PairAction
from routing.domain.value_objects.route import Route

from ..conftest import make_env, random_instances


def test_returns_match_forward_sums():
    torch.manual_seed(0)
    rewards = torch.rand(5, 3, dtype=torch.float64)
    values = torch.rand(5, 3, dtype=torch.float64)
    bootstrap = torch.rand(3, dtype=torch.float64)
    gamma = 0.9

    returns, advantages = compute_returns_and_advantages(rewards, values, bootstrap, gamma)

    for t in range(5):
        expected = sum(gamma**i * rewards[t + i] for i in range(5 - t)) + gamma ** (5 - t) * bootstrap
        assert torch.allclose(returns[t], expected, atol=1e-9)
    assert torch.allclose(advantages, returns - values, atol=1e-12)


def test_first_pass_gradient_is_the_policy_gradient():
    """Two-step toy MDP with a softmax policy over two actions."""
    theta = torch.tensor([0.3, -0.2], dtype=torch.float64, requires_grad=True)
    actions = torch.tensor([[0], [1]])
    advantages = torch.tensor([[1.5], [-0.5]], dtype=torch.float64)

    log_probs = torch.log_softmax(theta, dim=0)[actions]
    objective = ppo_surrogate(log_probs, log_probs.detach(), advantages, clip_epsilon=0.1)
    objective.backward()

    probs = torch.softmax(theta.detach(), dim=0)
    expected = sum(
        advantages[t, 0] * (torch.eye(2, dtype=torch.float64)[actions[t, 0]] - probs) for t in range(2)
    ) / 2
    assert objective.item() == pytest.approx(advantages.mean().item(), abs=1e-12)
    assert torch.allclose(theta.grad, expected, atol=1e-6)


def test_surrogate_clips_large_ratios():
    log_probs = torch.log(torch.tensor([2.0, 0.5], dtype=torch.float64))
    old = torch.zeros(2, dtype=torch.float64)
    advantages = torch.tensor([1.0, -1.0], dtype=torch.float64)

    # min(2 * 1, 1.1 * 1) = 1.1 and min(0.5 * -1, 0.9 * -1) = -0.9
    assert ppo_surrogate(log_probs, old, advantages, 0.1).item() == pytest.approx((1.1 - 0.9) / 2, abs=1e-12)


def test_clipped_branch_has_no_gradient():
    log_probs = torch.log(torch.tensor([1.5, 1.05], dtype=torch.float64)).requires_grad_()
    old = torch.zeros(2, dtype=torch.float64)
    advantages = torch.tensor([1.0, 1.0], dtype=torch.float64)

    ppo_surrogate(log_probs, old, advantages, clip_epsilon=0.2).backward()

    # ratio 1.5 is past 1 + eps with a positive advantage; ratio 1.05 is inside the band
    assert log_probs.grad[0].item() == 0.0
    assert log_probs.grad[1].item() == pytest.approx(1.05 / 2, abs=1e-12)


def test_clipped_value_loss_matches_direct_evaluation():
    values = torch.tensor([1.0, 0.0, 2.0], dtype=torch.float64)
    old = torch.tensor([0.5, 0.2, 2.05], dtype=torch.float64)
    returns = torch.tensor([0.0, 1.0, 3.0], dtype=torch.float64)
    eps = 0.1

    expected = np.mean(
        [
            max((v - r) ** 2, (o + min(max(v - o, -eps), eps) - r) ** 2)
            for v, o, r in zip(values.tolist(), old.tolist(), returns.tolist())
        ]
    )

    assert clipped_value_loss(values, old, returns, eps).item() == pytest.approx(expected, abs=1e-9)


@pytest.fixture
def networks(tiny_model_config):
    torch.manual_seed(0)
    return N2SPolicy(tiny_model_config).double(), N2SCritic(tiny_model_config).double()


def test_segment_replays_through_the_domain(networks):
    policy, critic = networks
    env = make_env(random_instances(3, 4, seed=7))
    start = [Route(order=tuple(row), n=3) for row in env.order.tolist()]

    segment = collect_segment(env, policy, critic, 4, torch.Generator().manual_seed(0))

    assert segment.rewards.shape == segment.old_log_probs.shape == segment.old_values.shape == (4, 4)
    for row, route in enumerate(start):
        for action in segment.actions:
            move = PairAction(int(action.request[row]), int(action.after_pickup[row]), int(action.after_delivery[row]))
            route = apply_action(route, move)
        assert route.order == tuple(segment.final.order[row].tolist())


def test_update_starts_on_policy_and_bounds_gradients(networks):
    policy, critic = networks
    config = TrainConfig(graph_size=7, n_step=3, t_train=3, ppo_epochs=2, grad_clip=0.05).resolved()
    env = make_env(random_instances(3, 4, seed=9))
    segment = collect_segment(env, policy, critic, config.n_step, torch.Generator().manual_seed(1))
    policy_optimizer = torch.optim.Adam(policy.parameters(), lr=1e-4)
    critic_optimizer = torch.optim.Adam(critic.parameters(), lr=1e-4)

    stats = ppo_update(segment, env, policy, critic, policy_optimizer, critic_optimizer, config)

    assert stats.first_pass_ratio == pytest.approx(1.0, abs=1e-6)
    for module in (policy, critic):
        norm = math.sqrt(sum(float(p.grad.pow(2).sum()) for p in module.parameters() if p.grad is not None))
        assert norm <= 0.05 + 1e-6
    assert math.isfinite(stats.critic_loss)


def test_non_finite_losses_are_reported(networks):
    policy, critic = networks
    config = TrainConfig(graph_size=7, n_step=2, t_train=2, ppo_epochs=1).resolved()
    env = make_env(random_instances(3, 2))
    segment = collect_segment(env, policy, critic, config.n_step)
    segment.rewards[0, 0] = float("nan")

    with pytest.raises(NonFiniteLossError) as excinfo:
        ppo_update(
            segment,
            env,
            policy,
            critic,
            torch.optim.Adam(policy.parameters()),
            torch.optim.Adam(critic.parameters()),
            config,
            epoch=3,
            batch=1,
        )

    assert excinfo.value.epoch == 3
    assert excinfo.value.batch == 1


def test_warmup_makes_the_warmed_routes_the_start(networks):
    policy, _ = networks
    env = make_env(random_instances(3, 3))

    curriculum_warmup(env, policy, 5, torch.Generator().manual_seed(0))

    assert torch.equal(env.best_cost, env.cost)
    assert env.steps == 0
    assert int(env.window.sum()) == 0
