"""Deterministic experiment runners behind the CLI subcommands.

Each task is a pure function of its key (model, n, seed, ...), owning a
stream derived from the seed and the task coordinates, so tasks can run
in any order or in parallel without changing results. Runners return
rows in sorted key order.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .active_learning import RunTrace, build_default_pool, run as run_acquisition
from .beliefs import Bernoulli, Normal
from .conjugate import BetaBernoulliModel, NormalGammaModel
from .gp import figure2_curves, gp_fit, Figure2Row
from .information import ErrorReport, estimation_errors
from .rng import RngStream

__all__ = [
    "FIG3_MODELS",
    "fig3_task",
    "fig3_rows",
    "fig3_summary",
    "fig2_rows",
    "active_learning_task",
    "active_learning_rows",
]

FIG3_MODELS = ("beta_bernoulli", "normal_gamma")

# Data-generating processes of the estimation-error experiment.
FIG3_TRUTH_P = 0.5
FIG3_TRUTH_MEAN = 1.0
FIG3_TRUTH_SD = 1.0


def fig3_task(
    model: str,
    n: int,
    seed: int,
    alpha: float = 1.0,
    beta: float = 1.0,
    m0: float = 0.0,
    kappa: float = 1.0,
) -> ErrorReport:
    """Sample one dataset, fit the conjugate posterior, report the errors."""
    model_index = FIG3_MODELS.index(model)
    stream = RngStream(seed).child(model_index).child(n)
    if model == "beta_bernoulli":
        truth = Bernoulli(FIG3_TRUTH_P)
        prior = BetaBernoulliModel(alpha, beta)
    else:
        truth = Normal(FIG3_TRUTH_MEAN, FIG3_TRUTH_SD**2)
        prior = NormalGammaModel(m0, kappa, alpha, beta)
    state = prior.update(truth.sample(stream, n))
    return estimation_errors(state, truth, model=model, n=n, seed=seed)


def fig3_rows(
    seeds: Sequence[int],
    ns: Sequence[int],
    alpha: float = 1.0,
    beta: float = 1.0,
    m0: float = 0.0,
    kappa: float = 1.0,
    mapper=map,
) -> list[ErrorReport]:
    keys = [
        (model, n, seed) for model in FIG3_MODELS for n in sorted(ns) for seed in sorted(seeds)
    ]
    tasks = [(model, n, seed, alpha, beta, m0, kappa) for model, n, seed in keys]
    return list(mapper(_fig3_star, tasks))


def _fig3_star(args) -> ErrorReport:
    return fig3_task(*args)


def fig3_summary(rows: Sequence[ErrorReport]) -> list[tuple[str, int, float, float]]:
    """Per-(model, n) means of the two squared errors, in row order."""
    out = []
    for model in FIG3_MODELS:
        ns = sorted({r.n for r in rows if r.model == model})
        for n in ns:
            group = [r for r in rows if r.model == model and r.n == n]
            out.append(
                (
                    model,
                    n,
                    float(np.mean([r.eps_theta for r in group])),
                    float(np.mean([r.eps_z for r in group])),
                )
            )
    return out


def fig2_rows(
    noise_sd: float = 0.1,
    grid_points: int = 401,
    mapper=map,
) -> list[Figure2Row]:
    """Uncertainty/dispersion/score curves for the two-point tanh dataset."""
    model = gp_fit([-2.0, 2.0], [math.tanh(-2.0), math.tanh(2.0)], noise_sd=noise_sd)
    grid = np.linspace(-8.0, 8.0, grid_points)
    from .decision import QuadraticLoss, WeightedQuadraticLoss

    losses = (QuadraticLoss(), WeightedQuadraticLoss())
    chunks = list(
        mapper(
            _fig2_star,
            [(model.noise_sd, grid_points, i) for i in range(len(losses))],
        )
    )
    return [row for chunk in chunks for row in chunk]


def _fig2_star(args) -> list[Figure2Row]:
    noise_sd, grid_points, loss_index = args
    from .decision import QuadraticLoss, WeightedQuadraticLoss

    losses = (QuadraticLoss(), WeightedQuadraticLoss())
    model = gp_fit([-2.0, 2.0], [math.tanh(-2.0), math.tanh(2.0)], noise_sd=noise_sd)
    grid = np.linspace(-8.0, 8.0, grid_points)
    return figure2_curves(
        model, losses=(losses[loss_index],), grid=grid, eval_noise_sd=noise_sd
    )


def active_learning_task(objective: str, seed: int, steps: int, n_arms: int) -> RunTrace:
    return run_acquisition(objective, seed, steps, build_default_pool(seed, n_arms))


def active_learning_rows(
    objectives: Sequence[str],
    seeds: Sequence[int],
    steps: int,
    n_arms: int,
    mapper=map,
) -> list[RunTrace]:
    tasks = [(o, s, steps, n_arms) for o in objectives for s in sorted(seeds)]
    return list(mapper(_al_star, tasks))


def _al_star(args) -> RunTrace:
    return active_learning_task(*args)
