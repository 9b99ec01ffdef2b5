"""Losses, Bayes-optimal actions, uncertainty, scores and decompositions.

The central objects are loss functions over (action, outcome) pairs.
Acting Bayes-optimally under a belief induces:

* an uncertainty measure: the minimal subjective expected loss
  (variance for quadratic loss, Shannon entropy for log loss);
* a proper scoring rule: the loss of the optimal action at a realized
  outcome;
* a discrepancy between a model belief and a reference belief: the
  expected excess loss of acting on the model when the reference
  generates outcomes, which equals expected score minus the
  reference's own dispersion.

Point losses (quadratic, weighted quadratic) take float actions; the
log loss takes a distribution action (the belief itself). Each loss
carries a positive ``scale`` multiplier, which rescales losses and
uncertainties but never changes the optimal action.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .beliefs import Belief, Bernoulli, Normal
from .quadrature import QuadratureRule, expectation

__all__ = [
    "QuadraticLoss",
    "LogLoss",
    "WeightedQuadraticLoss",
    "LossFunction",
    "Action",
    "DegenerateWeightError",
    "SupportError",
    "bayes_optimal_action",
    "uncertainty",
    "score",
    "expected_score",
    "discrepancy",
    "decompose_quadratic",
    "decompose_log",
    "bayes_estimator_mean",
    "kl_divergence",
    "weighted_quadratic_mass",
    "QuadraticDecomposition",
    "LogDecomposition",
]

# Below this weight mass the weighted-quadratic optimal action is ill
# conditioned; callers either get an error or the limit convention
# (action = belief mean, uncertainty = 0).
DEGENERATE_WEIGHT_MASS = 1e-12


class DegenerateWeightError(ArithmeticError):
    """The loss weight annihilates the belief's support."""


class SupportError(ValueError):
    """Beliefs live on incompatible supports (or absolute continuity fails)."""


@dataclass(frozen=True)
class QuadraticLoss:
    """(a - z)^2 on point actions; induces variance as uncertainty."""

    scale: float = 1.0
    action_kind = "point"


@dataclass(frozen=True)
class LogLoss:
    """-ln a(z) on distribution actions; induces entropy as uncertainty."""

    scale: float = 1.0
    action_kind = "distribution"


@dataclass(frozen=True)
class WeightedQuadraticLoss:
    """max(0, z) * (a - z)^2 on point actions."""

    scale: float = 1.0
    action_kind = "point"

    @staticmethod
    def weight(z):
        return np.maximum(z, 0.0)


LossFunction = Union[QuadraticLoss, LogLoss, WeightedQuadraticLoss]
Action = Union[float, Belief]


def weighted_quadratic_mass(belief: Belief, rule: QuadratureRule | None = None) -> float:
    """E[max(0, z)] under the belief, as the default quadrature computes it."""
    return expectation(WeightedQuadraticLoss.weight, belief, rule)


def _weighted_action(belief: Belief, rule: QuadratureRule | None, degenerate: str) -> float:
    mass = weighted_quadratic_mass(belief, rule)
    if mass < DEGENERATE_WEIGHT_MASS:
        if degenerate == "limit":
            return _as_scalar_mean(belief)
        raise DegenerateWeightError(
            f"weight mass {mass:.3e} below {DEGENERATE_WEIGHT_MASS:.0e}; "
            "belief has essentially no mass on z > 0"
        )
    weighted_mean = expectation(lambda z: WeightedQuadraticLoss.weight(z) * z, belief, rule)
    return weighted_mean / mass


def _as_scalar_mean(belief: Belief) -> float:
    mean = belief.mean()
    if np.ndim(mean) != 0:
        raise SupportError("point-action losses need a scalar outcome space")
    return float(mean)


def bayes_optimal_action(
    loss: LossFunction,
    belief: Belief,
    rule: QuadratureRule | None = None,
    degenerate: str = "raise",
) -> Action:
    """Action minimizing the subjective expected loss under the belief.

    Quadratic loss: the belief mean. Log loss: the belief itself.
    Weighted quadratic: E[w(z) z] / E[w(z)], computed by quadrature;
    raises DegenerateWeightError when the weight mass vanishes unless
    ``degenerate="limit"``, which falls back to the belief mean.
    """
    if isinstance(loss, QuadraticLoss):
        return _as_scalar_mean(belief)
    if isinstance(loss, LogLoss):
        return belief
    if isinstance(loss, WeightedQuadraticLoss):
        return _weighted_action(belief, rule, degenerate)
    raise TypeError(f"unknown loss {loss!r}")


def uncertainty(
    loss: LossFunction,
    belief: Belief,
    rule: QuadratureRule | None = None,
    degenerate: str = "raise",
) -> float:
    """Minimal subjective expected loss of acting optimally under the belief."""
    if isinstance(loss, QuadraticLoss):
        var = belief.variance()
        if np.ndim(var) != 0:
            raise SupportError("quadratic uncertainty needs a scalar outcome space")
        return loss.scale * float(var)
    if isinstance(loss, LogLoss):
        return loss.scale * belief.entropy()
    if isinstance(loss, WeightedQuadraticLoss):
        try:
            action = _weighted_action(belief, rule, degenerate="raise")
        except DegenerateWeightError:
            if degenerate == "limit":
                return 0.0
            raise
        integrand = lambda z: loss.weight(z) * (action - z) ** 2
        return loss.scale * expectation(integrand, belief, rule)
    raise TypeError(f"unknown loss {loss!r}")


def score(
    loss: LossFunction,
    belief: Belief,
    z,
    rule: QuadratureRule | None = None,
    degenerate: str = "raise",
):
    """Proper score: loss of the belief's Bayes-optimal action at outcome z."""
    if isinstance(loss, LogLoss):
        return loss.scale * -belief.logpdf(z)
    action = bayes_optimal_action(loss, belief, rule, degenerate)
    z = np.asarray(z, dtype=np.float64)
    if isinstance(loss, QuadraticLoss):
        out = loss.scale * (action - z) ** 2
    else:
        out = loss.scale * loss.weight(z) * (action - z) ** 2
    return out if out.ndim else float(out)


def _check_compatible(model: Belief, eval_belief: Belief) -> None:
    if model.support != eval_belief.support:
        raise SupportError(
            f"model support {model.support!r} does not match "
            f"evaluation support {eval_belief.support!r}"
        )


def expected_score(
    loss: LossFunction,
    model: Belief,
    eval_belief: Belief,
    rule: QuadratureRule | None = None,
    degenerate: str = "raise",
) -> float:
    """E under the evaluation belief of the model's score."""
    _check_compatible(model, eval_belief)
    return expectation(
        lambda z: score(loss, model, z, rule, degenerate), eval_belief, rule
    )


def discrepancy(
    loss: LossFunction,
    model: Belief,
    eval_belief: Belief,
    rule: QuadratureRule | None = None,
    degenerate: str = "raise",
) -> float:
    """Expected excess loss of acting on the model instead of the reference.

    Computed as a single expectation of the score difference, so it
    agrees with ``expected_score - uncertainty(eval)`` to quadrature
    accuracy, is nonnegative, and vanishes iff the optimal actions
    coincide.
    """
    _check_compatible(model, eval_belief)
    return expectation(
        lambda z: score(loss, model, z, rule, degenerate)
        - score(loss, eval_belief, z, rule, degenerate),
        eval_belief,
        rule,
    )


@dataclass(frozen=True)
class QuadraticDecomposition:
    mse: float
    squared_bias: float
    variance: float


def decompose_quadratic(model: Belief, eval_belief: Belief) -> QuadraticDecomposition:
    """Mean squared error split into squared bias plus reference variance."""
    _check_compatible(model, eval_belief)
    squared_bias = (float(model.mean()) - float(eval_belief.mean())) ** 2
    variance = float(eval_belief.variance())
    return QuadraticDecomposition(squared_bias + variance, squared_bias, variance)


@dataclass(frozen=True)
class LogDecomposition:
    cross_entropy: float
    kl: float
    entropy: float


def decompose_log(model: Belief, eval_belief: Belief) -> LogDecomposition:
    """Cross entropy split into KL divergence plus reference entropy."""
    kl = kl_divergence(eval_belief, model)
    entropy = eval_belief.entropy()
    return LogDecomposition(kl + entropy, kl, entropy)


def bayes_estimator_mean(pushforward: Belief) -> float:
    """Bayes estimator of a derived quantity under quadratic estimation loss."""
    return float(pushforward.mean())


def kl_divergence(p: Belief, q: Belief, rule: QuadratureRule | None = None) -> float:
    """KL(p || q); requires q's density positive wherever p has mass."""
    _check_compatible(p, q)
    if isinstance(p, Bernoulli) and isinstance(q, Bernoulli):
        total = 0.0
        for pp, qq in ((p.p, q.p), (1.0 - p.p, 1.0 - q.p)):
            if pp == 0.0:
                continue
            if qq == 0.0:
                raise SupportError("evaluation mass where model probability is zero")
            total += pp * math.log(pp / qq)
        return total
    if isinstance(p, Normal) and isinstance(q, Normal):
        return (
            0.5 * math.log(q.sigma2 / p.sigma2)
            + (p.sigma2 + (p.mu - q.mu) ** 2) / (2.0 * q.sigma2)
            - 0.5
        )
    out = expectation(lambda z: p.logpdf(z) - q.logpdf(z), p, rule)
    if not math.isfinite(out):
        raise SupportError("divergence is non-finite; supports are incompatible")
    return out
