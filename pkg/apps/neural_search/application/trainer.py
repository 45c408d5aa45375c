"""n-step PPO with curriculum warmup.

Each batch draws fresh instances and random start routes, warms the
routes up with the current policy, then alternates between collecting
``n_step`` transitions and ``ppo_epochs`` clipped updates on them until
``t_train`` steps have been taken.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np
import torch
from torch import nn
from tqdm import tqdm

from routing.domain.events.dataset_events import DomainEvent
from routing.domain.services.construction import generate_instance, random_initial_solution

from ..domain.enums.search_enums import DecodeMode
from ..domain.errors import NonFiniteLossError
from ..domain.events.search_events import BatchCompleted, CheckpointSaved, EpochCompleted, TrainingStarted
from ..domain.repositories.checkpoint_repository import CheckpointRepository, TrainingLog
from ..domain.services.schedule import curriculum_steps, learning_rate_at
from ..domain.value_objects.train_config import TrainConfig
from ..domain.value_objects.training_record import TrainingRecord
from .ports import EnvironmentFactory, SearchEnvironment, SearchPolicy

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


@dataclass
class Segment:
    """``n`` transitions collected under the behaviour policy.

    Tensors are stacked ``(n, B)``; ``snapshots[t]`` is the state before
    step ``t`` and ``final`` the state after the last step.
    """

    snapshots: list[Any]
    actions: list[Any]
    old_log_probs: torch.Tensor
    old_values: torch.Tensor
    rewards: torch.Tensor
    final: Any

    def __len__(self) -> int:
        return len(self.actions)


@dataclass(frozen=True)
class UpdateStats:
    """Means over the ``ppo_epochs`` passes of one update."""

    policy_objective: float
    critic_loss: float
    policy_grad_norm: float
    critic_grad_norm: float
    entropy: float
    first_pass_ratio: float


def curriculum_warmup(
    env: SearchEnvironment,
    policy: SearchPolicy,
    steps: int,
    generator: Optional[torch.Generator] = None,
) -> None:
    """Improve the start routes with the sampling policy for ``steps`` steps.

    The warmed routes become the start state: incumbents and the removal
    history are reset afterwards.
    """
    with torch.no_grad():
        for _ in range(steps):
            output = policy(env, DecodeMode.SAMPLE, generator)
            env.step(output.action)
    env.restart_from_current()


def collect_segment(
    env: SearchEnvironment,
    policy: SearchPolicy,
    critic: nn.Module,
    n_step: int,
    generator: Optional[torch.Generator] = None,
) -> Segment:
    """Take ``n_step`` sampled steps, recording behaviour log-probs and values."""
    snapshots, actions, log_probs, values, rewards = [], [], [], [], []
    with torch.no_grad():
        for _ in range(n_step):
            snapshots.append(env.snapshot())
            output = policy(env, DecodeMode.SAMPLE, generator)
            values.append(critic(output.embeddings, env.best_cost))
            rewards.append(env.step(output.action))
            actions.append(output.action)
            log_probs.append(output.log_prob)
    return Segment(
        snapshots=snapshots,
        actions=actions,
        old_log_probs=torch.stack(log_probs),
        old_values=torch.stack(values),
        rewards=torch.stack(rewards),
        final=env.snapshot(),
    )


def compute_returns_and_advantages(
    rewards: torch.Tensor,
    values: torch.Tensor,
    bootstrap: torch.Tensor,
    gamma: float,
) -> tuple[torch.Tensor, torch.Tensor]:
    """n-step returns and advantages.

    ``R_t = r_t + gamma * R_{t+1}`` backwards from ``R_n = bootstrap``, and
    ``A_t = R_t - values_t``.

    Args:
        rewards: ``(n, B)`` rewards.
        values: ``(n, B)`` critic values of the visited states.
        bootstrap: ``(B,)`` value of the state after the last step.
        gamma: Discount factor.
    """
    returns = torch.empty_like(rewards)
    running = bootstrap
    for t in reversed(range(rewards.size(0))):
        running = rewards[t] + gamma * running
        returns[t] = running
    return returns, returns - values


def ppo_surrogate(
    log_probs: torch.Tensor,
    old_log_probs: torch.Tensor,
    advantages: torch.Tensor,
    clip_epsilon: float,
) -> torch.Tensor:
    """Clipped surrogate objective (to be maximized)."""
    ratio = torch.exp(log_probs - old_log_probs)
    clipped = torch.clamp(ratio, 1.0 - clip_epsilon, 1.0 + clip_epsilon)
    return torch.min(ratio * advantages, clipped * advantages).mean()


def clipped_value_loss(
    values: torch.Tensor,
    old_values: torch.Tensor,
    returns: torch.Tensor,
    clip_epsilon: float,
) -> torch.Tensor:
    """Mean of the larger squared error of the raw and the clipped values.

    The clipped value stays within ``clip_epsilon`` of the value recorded
    at collection time.
    """
    clipped = old_values + torch.clamp(values - old_values, -clip_epsilon, clip_epsilon)
    return torch.max((values - returns) ** 2, (clipped - returns) ** 2).mean()


def _check_finite(name: str, value: torch.Tensor, epoch: int, batch: int, diagnostics: dict[str, float]) -> None:
    if not torch.isfinite(value):
        raise NonFiniteLossError(name, epoch, batch, details=diagnostics)


def ppo_update(
    segment: Segment,
    env: SearchEnvironment,
    policy: nn.Module,
    critic: nn.Module,
    policy_optimizer: torch.optim.Optimizer,
    critic_optimizer: torch.optim.Optimizer,
    config: TrainConfig,
    epoch: int = 0,
    batch: int = 0,
) -> UpdateStats:
    """Run ``config.ppo_epochs`` passes over ``segment``.

    Returns and advantages are recomputed with the current critic on every
    pass. Both networks have their gradient norm clipped to
    ``config.grad_clip``.

    Raises:
        NonFiniteLossError: If either loss is NaN or infinite.
    """
    grad_clip = config.grad_clip if config.grad_clip is not None else math.inf
    totals = {"objective": 0.0, "critic": 0.0, "policy_norm": 0.0, "critic_norm": 0.0, "entropy": 0.0}
    first_pass_ratio = 1.0

    for inner in range(config.ppo_epochs):
        log_probs, values, entropies = [], [], []
        for snapshot, action in zip(segment.snapshots, segment.actions):
            state = env.at(snapshot)
            output = policy(state, action=action)
            log_probs.append(output.log_prob)
            entropies.append(output.entropy)
            values.append(critic(output.embeddings.detach(), state.best_cost))
        log_probs_t, values_t = torch.stack(log_probs), torch.stack(values)

        with torch.no_grad():
            final = env.at(segment.final)
            bootstrap = critic(policy.embed(final)[0], final.best_cost)
            returns, advantages = compute_returns_and_advantages(
                segment.rewards.to(values_t.dtype), values_t.detach(), bootstrap, config.gamma
            )
            if inner == 0:
                first_pass_ratio = float(torch.exp(log_probs_t - segment.old_log_probs).mean())

        objective = ppo_surrogate(log_probs_t, segment.old_log_probs, advantages, config.clip_epsilon)
        critic_loss = clipped_value_loss(values_t, segment.old_values, returns, config.clip_epsilon)
        diagnostics = {
            "pass": inner,
            "mean_reward": float(segment.rewards.mean()),
            "mean_return": float(returns.mean()),
            "max_abs_log_prob": float(log_probs_t.detach().abs().max()),
        }
        _check_finite("policy objective", objective, epoch, batch, diagnostics)
        _check_finite("critic loss", critic_loss, epoch, batch, diagnostics)

        policy_optimizer.zero_grad()
        (-objective).backward()
        policy_norm = nn.utils.clip_grad_norm_(policy.parameters(), grad_clip)
        policy_optimizer.step()

        critic_optimizer.zero_grad()
        critic_loss.backward()
        critic_norm = nn.utils.clip_grad_norm_(critic.parameters(), grad_clip)
        critic_optimizer.step()

        totals["objective"] += float(objective)
        totals["critic"] += float(critic_loss)
        totals["policy_norm"] += float(policy_norm)
        totals["critic_norm"] += float(critic_norm)
        totals["entropy"] += float(torch.stack(entropies).detach().mean())

    passes = config.ppo_epochs
    return UpdateStats(
        policy_objective=totals["objective"] / passes,
        critic_loss=totals["critic"] / passes,
        policy_grad_norm=totals["policy_norm"] / passes,
        critic_grad_norm=totals["critic_norm"] / passes,
        entropy=totals["entropy"] / passes,
        first_pass_ratio=first_pass_ratio,
    )


@dataclass
class TrainingSummary:
    """What a training run produced."""

    epochs_completed: int
    checkpoints: list[Path] = field(default_factory=list)
    epoch_metrics: list[dict[str, float]] = field(default_factory=list)


class Trainer:
    """Runs epochs of batches and keeps optimizers, schedules and checkpoints.

    Attributes:
        policy: The learned policy being trained.
        critic: The state-value critic.
        config: Resolved training configuration.
    """

    def __init__(
        self,
        policy: nn.Module,
        critic: nn.Module,
        env_factory: EnvironmentFactory,
        config: TrainConfig,
        checkpoints: Optional[CheckpointRepository] = None,
        training_log: Optional[TrainingLog] = None,
        event_sink: Optional[Callable[[DomainEvent], None]] = None,
        quiet: bool = True,
        seed: int = 0,
    ) -> None:
        self.policy = policy
        self.critic = critic
        self.config = config.resolved()
        self._env_factory = env_factory
        self._checkpoints = checkpoints
        self._training_log = training_log
        self._event_sink = event_sink or (lambda event: None)
        self._quiet = quiet

        self.policy_optimizer = torch.optim.Adam(policy.parameters(), lr=self.config.lr_policy)
        self.critic_optimizer = torch.optim.Adam(critic.parameters(), lr=self.config.lr_critic)
        self.start_epoch = 0
        self.seed(seed)

    def seed(self, seed: int) -> None:
        """Seed the instance stream and the action sampler."""
        self.data_rng = np.random.default_rng(seed)
        self.generator = torch.Generator(device=self._device()).manual_seed(seed)

    def _device(self) -> torch.device:
        return next(self.policy.parameters()).device

    def set_epoch_learning_rates(self, epoch: int) -> None:
        """Apply the decayed learning rates of ``epoch``."""
        for optimizer, base in ((self.policy_optimizer, self.config.lr_policy), (self.critic_optimizer, self.config.lr_critic)):
            for group in optimizer.param_groups:
                group["lr"] = learning_rate_at(base, self.config.lr_decay, epoch)

    def state_dict(self, epochs_completed: int) -> dict[str, Any]:
        return {
            "version": CHECKPOINT_VERSION,
            "model_config": self.policy.config.to_dict(),
            "train_config": self.config.to_dict(),
            "policy": self.policy.state_dict(),
            "critic": self.critic.state_dict(),
            "optimizers": {
                "policy": self.policy_optimizer.state_dict(),
                "critic": self.critic_optimizer.state_dict(),
            },
            "epoch": epochs_completed,
            "rng": {
                "numpy": self.data_rng.bit_generator.state,
                "torch": self.generator.get_state(),
            },
        }

    def load_state_dict(self, state: dict[str, Any]) -> None:
        """Restore networks, optimizers, RNG streams and the epoch counter."""
        self.policy.load_state_dict(state["policy"])
        self.critic.load_state_dict(state["critic"])
        self.policy_optimizer.load_state_dict(state["optimizers"]["policy"])
        self.critic_optimizer.load_state_dict(state["optimizers"]["critic"])
        self.data_rng.bit_generator.state = state["rng"]["numpy"]
        self.generator.set_state(state["rng"]["torch"])
        self.start_epoch = int(state["epoch"])

    def _draw_batch(self) -> tuple[list[Any], list[Any]]:
        n, variant = self.config.n_requests, self.config.variant
        seeds = self.data_rng.integers(0, 2**31 - 1, size=self.config.batch_size)
        instances = [generate_instance(n, int(seed), variant) for seed in seeds]
        routes = [random_initial_solution(instance, variant, seed=self.data_rng) for instance in instances]
        return instances, routes

    def train_batch(self, epoch: int, batch: int) -> TrainingRecord:
        """Warm up a fresh batch and run ``t_train`` steps of n-step PPO on it."""
        instances, routes = self._draw_batch()
        env = self._env_factory(instances, routes, self.config.history_window, self.config.variant)
        curriculum_warmup(env, self.policy, curriculum_steps(epoch, self.config.curriculum_rho), self.generator)
        initial_cost = float(env.cost.mean())

        stats = [
            ppo_update(
                collect_segment(env, self.policy, self.critic, self.config.n_step, self.generator),
                env,
                self.policy,
                self.critic,
                self.policy_optimizer,
                self.critic_optimizer,
                self.config,
                epoch,
                batch,
            )
            for _ in range(self.config.segments_per_batch)
        ]
        record = TrainingRecord(
            epoch=epoch,
            batch=batch,
            mean_initial_cost=initial_cost,
            mean_best_cost=float(env.best_cost.mean()),
            policy_objective=float(np.mean([s.policy_objective for s in stats])),
            critic_loss=float(np.mean([s.critic_loss for s in stats])),
            policy_grad_norm=float(np.mean([s.policy_grad_norm for s in stats])),
            critic_grad_norm=float(np.mean([s.critic_grad_norm for s in stats])),
            entropy=float(np.mean([s.entropy for s in stats])),
            lr_policy=self.policy_optimizer.param_groups[0]["lr"],
            lr_critic=self.critic_optimizer.param_groups[0]["lr"],
        )
        if self._training_log is not None:
            self._training_log.append(record)
        self._event_sink(
            BatchCompleted(
                aggregate_id=f"epoch-{epoch}",
                epoch=epoch,
                batch=batch,
                mean_best_cost=record.mean_best_cost,
                policy_objective=record.policy_objective,
                critic_loss=record.critic_loss,
            )
        )
        return record

    def train(self, out_dir: Path) -> TrainingSummary:
        """Train from ``start_epoch`` up to ``config.epochs``.

        A checkpoint is written every ``checkpoint_every`` epochs and after
        the last one.
        """
        config = self.config
        summary = TrainingSummary(epochs_completed=self.start_epoch)
        self._event_sink(
            TrainingStarted(
                aggregate_id=str(out_dir),
                start_epoch=self.start_epoch,
                epochs=config.epochs,
                graph_size=config.graph_size,
                variant=config.variant.value,
            )
        )
        logger.info(f"Training epochs {self.start_epoch}..{config.epochs - 1} on |V|={config.graph_size}")

        self.policy.train()
        self.critic.train()
        for epoch in range(self.start_epoch, config.epochs):
            self.set_epoch_learning_rates(epoch)
            records = [
                self.train_batch(epoch, batch)
                for batch in tqdm(
                    range(config.batches_per_epoch),
                    desc=f"epoch {epoch}",
                    disable=self._quiet,
                    leave=False,
                )
            ]
            metrics = {
                "epoch": epoch,
                "mean_initial_cost": float(np.mean([r.mean_initial_cost for r in records])),
                "mean_best_cost": float(np.mean([r.mean_best_cost for r in records])),
                "policy_objective": float(np.mean([r.policy_objective for r in records])),
                "critic_loss": float(np.mean([r.critic_loss for r in records])),
                "entropy": float(np.mean([r.entropy for r in records])),
                "lr_policy": records[-1].lr_policy,
            }
            summary.epoch_metrics.append(metrics)
            summary.epochs_completed = epoch + 1
            self._event_sink(EpochCompleted(aggregate_id=str(out_dir), **metrics))

            last = epoch + 1 == config.epochs
            if self._checkpoints is not None and ((epoch + 1) % config.checkpoint_every == 0 or last):
                path = self._checkpoints.save(self.state_dict(epoch + 1), out_dir, epoch + 1)
                summary.checkpoints.append(path)
                self._event_sink(CheckpointSaved(aggregate_id=str(path), epoch=epoch + 1))

        return summary
