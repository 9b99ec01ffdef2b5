"""Exact conjugate Bayesian inference for two model families.

Beta-Bernoulli: eta ~ Beta(alpha, beta), y | eta ~ Bernoulli(eta).
Normal-Gamma: lam ~ Gamma(alpha, beta), mu | lam ~ N(m, 1/(kappa lam)),
y | mu, lam ~ N(mu, 1/lam).

States are immutable; ``update`` returns a new state computed from the
observations' sufficient statistics, so batch and sequential updating
agree to rounding. Both families expose the posterior predictive, the
parameter posterior's entropy, and the expected predictive entropy
conditional on the parameters - the three quantities the information-
gain estimators are built from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import beliefs
from .special import digamma

__all__ = ["BetaBernoulliModel", "NormalGammaModel", "ConjugateModel"]

_LOG_2PIE = math.log(2.0 * math.pi * math.e)


@dataclass(frozen=True)
class BetaBernoulliModel:
    """Posterior state of the Beta-Bernoulli family (pseudo-counts)."""

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise ValueError("Beta-Bernoulli pseudo-counts must be strictly positive")

    def update(self, observations) -> "BetaBernoulliModel":
        ys = np.atleast_1d(np.asarray(observations, dtype=np.float64))
        if ys.size == 0:
            return self
        if not np.all((ys == 0.0) | (ys == 1.0)):
            raise ValueError("Beta-Bernoulli observations must be 0 or 1")
        ones = float(ys.sum())
        return BetaBernoulliModel(self.alpha + ones, self.beta + ys.size - ones)

    def predictive(self) -> beliefs.Bernoulli:
        return beliefs.Bernoulli(self.alpha / (self.alpha + self.beta))

    def parameter_belief(self) -> beliefs.Beta:
        return beliefs.Beta(self.alpha, self.beta)

    def parameter_entropy(self) -> float:
        return self.parameter_belief().entropy()

    def expected_conditional_entropy(self) -> float:
        """E over the bias posterior of the Bernoulli entropy H[Bern(eta)]."""
        a, b = self.alpha, self.beta
        return digamma(a + b + 1.0) - (a * digamma(a + 1.0) + b * digamma(b + 1.0)) / (a + b)


@dataclass(frozen=True)
class NormalGammaModel:
    """Posterior state of the Normal-Gamma family."""

    m: float = 0.0
    kappa: float = 1.0
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (self.kappa > 0.0 and self.alpha > 0.0 and self.beta > 0.0):
            raise ValueError("Normal-Gamma kappa, alpha, beta must be strictly positive")

    def update(self, observations) -> "NormalGammaModel":
        ys = np.atleast_1d(np.asarray(observations, dtype=np.float64))
        n = ys.size
        if n == 0:
            return self
        if not np.all(np.isfinite(ys)):
            raise ValueError("Normal-Gamma observations must be finite reals")
        ybar = float(ys.mean())
        ss = float(((ys - ybar) ** 2).sum())
        kappa_new = self.kappa + n
        return NormalGammaModel(
            m=(self.kappa * self.m + n * ybar) / kappa_new,
            kappa=kappa_new,
            alpha=self.alpha + n / 2.0,
            beta=self.beta + 0.5 * ss + self.kappa * n * (ybar - self.m) ** 2 / (2.0 * kappa_new),
        )

    def predictive(self) -> beliefs.StudentT:
        scale = math.sqrt(self.beta * (self.kappa + 1.0) / (self.alpha * self.kappa))
        return beliefs.StudentT(df=2.0 * self.alpha, loc=self.m, scale=scale)

    def parameter_belief(self) -> beliefs.NormalGamma:
        return beliefs.NormalGamma(self.m, self.kappa, self.alpha, self.beta)

    def parameter_entropy(self) -> float:
        return self.parameter_belief().entropy()

    def expected_conditional_entropy(self) -> float:
        """E over the precision posterior of the Gaussian entropy H[N(mu, 1/lam)]."""
        return 0.5 * _LOG_2PIE - 0.5 * (digamma(self.alpha) - math.log(self.beta))


ConjugateModel = Union[BetaBernoulliModel, NormalGammaModel]
