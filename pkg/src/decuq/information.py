"""Information-gain estimators and uncertainty-reduction quantities.

For a conjugate model with predictive p(z) and parameter posterior
p(theta), the expected information gain in the parameters from one
observation has two equivalent forms:

* predictive form: H[p(z)] - E_theta[H[p(z | theta)]]
* parameter form:  H[p(theta)] - E_{p(z)}[H[p(theta | z)]]

Both are implemented, along with the "true" one-step gain (outer
expectation over the actual data distribution instead of the model's
predictive), the infinite-data predictive information gain under
posterior collapse, and the squared errors of treating the model-based
gain as an estimator of either target. Expected uncertainty reduction
is provided in its true form (averaging over the data distribution) and
its model-simulated estimate; both switch between exhaustive
enumeration and Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .beliefs import Belief, Bernoulli, Normal
from .conjugate import BetaBernoulliModel, ConjugateModel
from .decision import LossFunction, uncertainty
from .quadrature import QuadratureRule, gauss_hermite
from .rng import RngStream
from .special import lbeta

__all__ = [
    "DataSource",
    "EurResult",
    "ErrorReport",
    "TotalDecomposition",
    "uncertainty_reduction",
    "eur_true",
    "eur_estimate",
    "eig_theta",
    "eig_theta_parameter_form",
    "eig_theta_true",
    "ig_z_infinity",
    "estimation_errors",
    "decompose_total",
]

# Exhaustive enumeration bound for binary outcome trees (2^16 leaves).
EXHAUSTIVE_HORIZON = 16

PARAMETER_FORM_DRAWS = 10_000


@dataclass
class DataSource:
    """A true data-generating process sampled i.i.d. with an owned stream."""

    truth: Belief
    rng: RngStream

    def draw(self, n: int) -> np.ndarray:
        return self.truth.sample(self.rng, n)


@dataclass(frozen=True)
class EurResult:
    value: float
    standard_error: float
    method: str  # "exhaustive" | "monte_carlo" | "empty"


@dataclass(frozen=True)
class ErrorReport:
    """Per-(model, n, seed) record of the information-gain estimation errors."""

    model: str
    n: int
    seed: int
    eig_theta: float
    eig_theta_true: float
    ig_z_inf: float
    eps_theta: float
    eps_z: float


@dataclass(frozen=True)
class TotalDecomposition:
    total: float
    reducible: float
    irreducible: float


def uncertainty_reduction(loss: LossFunction, state: ConjugateModel, new_data) -> float:
    """Drop in predictive uncertainty from updating on new_data (may be negative)."""
    before = uncertainty(loss, state.predictive())
    after = uncertainty(loss, state.update(new_data).predictive())
    return before - after


def _binomial_log_weights(m: int) -> np.ndarray:
    return np.array([-lbeta(k + 1.0, m - k + 1.0) - math.log(m + 1.0) for k in range(m + 1)])


def _count_datasets(m: int) -> list[np.ndarray]:
    return [np.concatenate([np.ones(k), np.zeros(m - k)]) for k in range(m + 1)]


def eur_true(
    loss: LossFunction,
    state: ConjugateModel,
    source: DataSource,
    m: int,
    reps: int = 1000,
) -> EurResult:
    """Expected uncertainty reduction with data drawn from the true process.

    Binary truths with horizon <= 16 are enumerated exactly over outcome
    counts (the conjugate update is exchangeable); otherwise averages
    ``reps`` Monte-Carlo datasets of size m.
    """
    if m == 0:
        return EurResult(0.0, 0.0, "empty")
    if m < 0 or reps < 1:
        raise ValueError("horizon m must be >= 0 and reps >= 1")
    truth = source.truth
    if isinstance(truth, Bernoulli) and m <= EXHAUSTIVE_HORIZON:
        log_binom = _binomial_log_weights(m)
        ks = np.arange(m + 1)
        with np.errstate(divide="ignore"):
            log_w = log_binom + ks * np.log(truth.p) + (m - ks) * np.log1p(-truth.p)
        weights = np.exp(log_w)
        urs = np.array(
            [uncertainty_reduction(loss, state, data) for data in _count_datasets(m)]
        )
        return EurResult(float(np.sum(weights * urs)), 0.0, "exhaustive")
    values = np.array(
        [uncertainty_reduction(loss, state, source.draw(m)) for _ in range(reps)]
    )
    se = float(values.std(ddof=1) / math.sqrt(reps)) if reps > 1 else 0.0
    return EurResult(float(values.mean()), se, "monte_carlo")


def eur_estimate(
    loss: LossFunction,
    state: ConjugateModel,
    m: int,
    reps: int = 1000,
    rng: RngStream | None = None,
) -> EurResult:
    """Expected uncertainty reduction with the model simulating its own data.

    Future observations follow the sequentially re-updated posterior
    predictive, and the updated belief is the exact conjugate posterior.
    Binary models with horizon <= 16 are enumerated exactly under the
    joint predictive; continuous models are simulated.
    """
    if m == 0:
        return EurResult(0.0, 0.0, "empty")
    if m < 0 or reps < 1:
        raise ValueError("horizon m must be >= 0 and reps >= 1")
    if isinstance(state, BetaBernoulliModel) and m <= EXHAUSTIVE_HORIZON:
        # Joint predictive mass of a binary sequence depends only on its
        # count of ones: C(m, k) B(alpha+k, beta+m-k) / B(alpha, beta).
        log_binom = _binomial_log_weights(m)
        log_w = np.array(
            [
                log_binom[k]
                + lbeta(state.alpha + k, state.beta + m - k)
                - lbeta(state.alpha, state.beta)
                for k in range(m + 1)
            ]
        )
        weights = np.exp(log_w)
        urs = np.array(
            [uncertainty_reduction(loss, state, data) for data in _count_datasets(m)]
        )
        return EurResult(float(np.sum(weights * urs)), 0.0, "exhaustive")
    if rng is None:
        rng = RngStream(0)
    before = uncertainty(loss, state.predictive())
    values = np.empty(reps)
    for r in range(reps):
        current = state
        for _ in range(m):
            y = current.predictive().sample(rng, 1)
            current = current.update(y)
        values[r] = before - uncertainty(loss, current.predictive())
    se = float(values.std(ddof=1) / math.sqrt(reps)) if reps > 1 else 0.0
    return EurResult(float(values.mean()), se, "monte_carlo")


def eig_theta(state: ConjugateModel) -> float:
    """Expected information gain in the parameters, predictive form (closed)."""
    return state.predictive().entropy() - state.expected_conditional_entropy()


def eig_theta_parameter_form(
    state: ConjugateModel,
    rng: RngStream | None = None,
    draws: int = PARAMETER_FORM_DRAWS,
) -> float:
    """Parameter form of the expected information gain.

    Exact for the binary family; for the continuous family the outer
    expectation over the heavy-tailed predictive uses Monte Carlo.
    """
    prior_entropy = state.parameter_entropy()
    predictive = state.predictive()
    if isinstance(state, BetaBernoulliModel):
        p = predictive.p
        h1 = state.update([1.0]).parameter_entropy()
        h0 = state.update([0.0]).parameter_entropy()
        return prior_entropy - (p * h1 + (1.0 - p) * h0)
    if rng is None:
        rng = RngStream(0)
    zs = predictive.sample(rng, draws)
    posterior_entropies = np.array([state.update([z]).parameter_entropy() for z in zs])
    return prior_entropy - float(posterior_entropies.mean())


def eig_theta_true(
    state: ConjugateModel,
    truth: Belief,
    rule: QuadratureRule | None = None,
) -> float:
    """One-step information gain with the outer expectation over the truth."""
    prior_entropy = state.parameter_entropy()
    if isinstance(truth, Bernoulli):
        h1 = state.update([1.0]).parameter_entropy()
        h0 = state.update([0.0]).parameter_entropy()
        return prior_entropy - (truth.p * h1 + (1.0 - truth.p) * h0)
    if isinstance(truth, Normal):
        if rule is None:
            rule = gauss_hermite()
        zs = truth.mu + math.sqrt(2.0 * truth.sigma2) * rule.nodes
        vals = np.array([state.update([z]).parameter_entropy() for z in zs])
        return prior_entropy - float(np.sum(rule.weights * vals) / math.sqrt(math.pi))
    raise ValueError(f"unsupported truth distribution {type(truth).__name__}")


def ig_z_infinity(state: ConjugateModel, truth: Belief) -> float:
    """Predictive-entropy reduction from infinite data under posterior collapse.

    Assumes the model is well specified for the truth, so the limiting
    predictive equals the data distribution and the gain reduces to
    current predictive entropy minus the truth's entropy.
    """
    return state.predictive().entropy() - truth.entropy()


def estimation_errors(
    state: ConjugateModel,
    truth: Belief,
    model: str = "",
    n: int = 0,
    seed: int = 0,
) -> ErrorReport:
    """Squared errors of the model-based gain against its two targets."""
    eig = eig_theta(state)
    eig_true = eig_theta_true(state, truth)
    ig_inf = ig_z_infinity(state, truth)
    return ErrorReport(
        model=model,
        n=n,
        seed=seed,
        eig_theta=eig,
        eig_theta_true=eig_true,
        ig_z_inf=ig_inf,
        eps_theta=(eig - eig_true) ** 2,
        eps_z=(eig - ig_inf) ** 2,
    )


def decompose_total(loss: LossFunction, state: ConjugateModel, truth: Belief) -> TotalDecomposition:
    """Split predictive uncertainty into irreducible and reducible parts.

    The reducible part is reported as computed and may be negative when
    the model is underdispersed relative to the truth.
    """
    total = uncertainty(loss, state.predictive())
    irreducible = uncertainty(loss, truth)
    return TotalDecomposition(total, total - irreducible, irreducible)
