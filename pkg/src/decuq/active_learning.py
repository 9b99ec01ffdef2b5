"""Pool-based acquisition benchmark: parameter information gain vs entropy.

Each arm is a Beta-Bernoulli model of an unknown coin with a hidden
true bias. An acquisition objective repeatedly picks an arm, observes a
flip from the hidden bias, and updates that arm's posterior. The
default pool plants a distractor: a fair coin whose posterior is
already highly concentrated, so flipping it teaches nothing, yet its
predictive entropy stays maximal. Predictive-entropy acquisition keeps
chasing that irreducible noise while information-gain acquisition
spends its budget on arms whose parameters are still unknown.

``acquire_step`` deliberately receives posterior states only, never the
hidden biases, so no objective can cheat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .beliefs import Bernoulli
from .conjugate import BetaBernoulliModel
from .decision import LogLoss, expected_score
from .information import eig_theta
from .rng import RngStream

__all__ = [
    "Arm",
    "RunTrace",
    "OBJECTIVES",
    "build_default_pool",
    "acquire_step",
    "pool_log_score",
    "run",
    "run_benchmark",
]

OBJECTIVES = ("bald", "entropy", "random")

DEFAULT_ARMS = 8
DEFAULT_STEPS = 200
DEFAULT_SEEDS = 20

_DISTRACTOR_PRIOR = BetaBernoulliModel(200.0, 200.0)


@dataclass(frozen=True)
class Arm:
    state: BetaBernoulliModel
    true_bias: float


@dataclass(frozen=True)
class RunTrace:
    """One acquisition run: picks per step plus the metric trajectory.

    ``metrics`` has length steps + 1; entry 0 is the pre-acquisition
    (prior) value of the evaluation metric.
    """

    objective: str
    seed: int
    picks: tuple[int, ...]
    metrics: tuple[float, ...]


def build_default_pool(seed: int, n_arms: int = DEFAULT_ARMS) -> list[Arm]:
    """Distractor arm (fair coin, concentrated prior) plus uniform-bias arms."""
    if n_arms < 2:
        raise ValueError("pool needs at least the distractor and one live arm")
    bias_rng = RngStream(seed)
    biases = bias_rng.uniform(n_arms - 1)
    pool = [Arm(_DISTRACTOR_PRIOR, 0.5)]
    pool.extend(Arm(BetaBernoulliModel(), float(b)) for b in biases)
    return pool


def acquire_step(
    states: Sequence[BetaBernoulliModel], objective: str, rng: RngStream
) -> int:
    """Pick an arm index; ties resolve to the lowest index."""
    if not states:
        raise ValueError("pool is empty")
    if objective == "bald":
        return int(np.argmax([eig_theta(s) for s in states]))
    if objective == "entropy":
        return int(np.argmax([s.predictive().entropy() for s in states]))
    if objective == "random":
        return int(rng.uniform(1)[0] * len(states))
    raise ValueError(f"unknown objective {objective!r}")


def pool_log_score(states: Sequence[BetaBernoulliModel], biases: Sequence[float]) -> float:
    """Mean expected log score of each arm's predictive against its true coin."""
    loss = LogLoss()
    return float(
        np.mean(
            [
                expected_score(loss, s.predictive(), Bernoulli(b))
                for s, b in zip(states, biases)
            ]
        )
    )


def run(
    objective: str,
    seed: int,
    steps: int = DEFAULT_STEPS,
    pool: Sequence[Arm] | None = None,
) -> RunTrace:
    """Sequential acquisition on the pool; deterministic given the seed.

    The pool is derived from the seed alone, so different objectives on
    the same seed face identical arms; the acquisition/outcome stream is
    a per-objective child of the seed.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if pool is None:
        pool = build_default_pool(seed)
    rng = RngStream(seed).child(OBJECTIVES.index(objective) + 1)
    states = [arm.state for arm in pool]
    biases = [arm.true_bias for arm in pool]
    picks: list[int] = []
    metrics = [pool_log_score(states, biases)]
    for _ in range(steps):
        i = acquire_step(states, objective, rng)
        y = Bernoulli(biases[i]).sample(rng, 1)
        states[i] = states[i].update(y)
        picks.append(i)
        metrics.append(pool_log_score(states, biases))
    return RunTrace(objective, seed, tuple(picks), tuple(metrics))


def run_benchmark(
    objectives: Sequence[str] = OBJECTIVES,
    seeds: Sequence[int] = tuple(range(DEFAULT_SEEDS)),
    steps: int = DEFAULT_STEPS,
    n_arms: int = DEFAULT_ARMS,
) -> list[RunTrace]:
    return [
        run(objective, seed, steps, build_default_pool(seed, n_arms))
        for objective in objectives
        for seed in seeds
    ]
