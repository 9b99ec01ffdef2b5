"""Minimal Gaussian-process regression with a fixed unit-bandwidth RBF kernel.

The regressor supports exactly what the uncertainty-versus-evaluation
curves need: fitting a handful of 1-d points under Gaussian observation
noise and returning the noisy predictive as a Normal belief. On a grid
of inputs, ``figure2_curves`` compares the model's loss-induced
predictive uncertainty with the dispersion of a reference distribution
and the expected score of the model against it, for each loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .beliefs import Normal
from .decision import (
    LogLoss,
    LossFunction,
    QuadraticLoss,
    WeightedQuadraticLoss,
    DEGENERATE_WEIGHT_MASS,
    expected_score,
    uncertainty,
    weighted_quadratic_mass,
)

__all__ = ["GPModel", "Figure2Row", "gp_fit", "gp_predict", "figure2_curves", "loss_id"]

_JITTER = 1e-12


def _kernel(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.exp(-0.5 * (a[:, None] - b[None, :]) ** 2)


@dataclass(frozen=True, eq=False)
class GPModel:
    inputs: np.ndarray
    outputs: np.ndarray
    noise_sd: float
    chol: np.ndarray
    weights: np.ndarray  # (K + noise^2 I)^{-1} outputs


def gp_fit(inputs, outputs, noise_sd: float = 0.1) -> GPModel:
    """Fit the GP; inputs must be distinct and noise_sd positive."""
    x = np.asarray(inputs, dtype=np.float64).ravel()
    y = np.asarray(outputs, dtype=np.float64).ravel()
    if x.size != y.size or x.size == 0:
        raise ValueError("inputs and outputs must be nonempty and equal-length")
    if np.unique(x).size != x.size:
        raise ValueError("duplicate training inputs make the Gram matrix singular")
    if not noise_sd > 0.0:
        raise ValueError("noise_sd must be strictly positive")
    gram = _kernel(x, x) + noise_sd**2 * np.eye(x.size)
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        chol = np.linalg.cholesky(gram + _JITTER * np.eye(x.size))
    weights = np.linalg.solve(chol.T, np.linalg.solve(chol, y))
    return GPModel(x, y, noise_sd, chol, weights)


def gp_predict(model: GPModel, x: float) -> Normal:
    """Noisy predictive at x: the latent posterior plus observation noise."""
    k_star = _kernel(np.atleast_1d(np.float64(x)), model.inputs)[0]
    mean = float(k_star @ model.weights)
    v = np.linalg.solve(model.chol, k_star)
    var = 1.0 - float(v @ v) + model.noise_sd**2
    return Normal(mean, var)


def loss_id(loss: LossFunction) -> str:
    if isinstance(loss, QuadraticLoss):
        return "quadratic"
    if isinstance(loss, LogLoss):
        return "log"
    if isinstance(loss, WeightedQuadraticLoss):
        return "weighted_quadratic"
    raise TypeError(f"unknown loss {loss!r}")


@dataclass(frozen=True)
class Figure2Row:
    x: float
    loss: str
    uncertainty: float
    dispersion: float
    expected_score: float
    degenerate: bool


def figure2_curves(
    model: GPModel,
    losses: Sequence[LossFunction] = (QuadraticLoss(), WeightedQuadraticLoss()),
    grid: np.ndarray | None = None,
    eval_mean: Callable[[float], float] = math.tanh,
    eval_noise_sd: float = 0.1,
) -> list[Figure2Row]:
    """Uncertainty, dispersion and expected score across the input grid.

    The reference distribution at x is Normal(eval_mean(x), eval_noise_sd^2).
    Rows where the weighted-quadratic weight mass of either distribution
    vanishes are emitted with the limit convention (zero uncertainty at
    zero mass) and flagged degenerate rather than omitted.
    """
    if grid is None:
        grid = np.linspace(-8.0, 8.0, 401)
    rows = []
    for loss in losses:
        lid = loss_id(loss)
        for x in grid:
            predictive = gp_predict(model, float(x))
            reference = Normal(eval_mean(float(x)), eval_noise_sd**2)
            degenerate = False
            if isinstance(loss, WeightedQuadraticLoss):
                degenerate = (
                    weighted_quadratic_mass(predictive) < DEGENERATE_WEIGHT_MASS
                    or weighted_quadratic_mass(reference) < DEGENERATE_WEIGHT_MASS
                )
            rows.append(
                Figure2Row(
                    x=float(x),
                    loss=lid,
                    uncertainty=uncertainty(loss, predictive, degenerate="limit"),
                    dispersion=uncertainty(loss, reference, degenerate="limit"),
                    expected_score=expected_score(
                        loss, predictive, reference, degenerate="limit"
                    ),
                    degenerate=degenerate,
                )
            )
    return rows
