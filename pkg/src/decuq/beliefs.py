"""Belief distributions with closed-form moments and entropies.

Every belief exposes ``mean``, ``variance``, ``entropy`` (nats),
``logpdf`` and seeded ``sample``; these are the only distribution
operations the rest of the package needs. Entropies are closed form,
except for finite mixtures of normals, which use per-component
Gauss-Hermite quadrature of the negative log mixture density.

All parameters are validated on construction; instances are immutable.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .rng import RngStream
from .special import digamma, lbeta, lgamma

__all__ = [
    "Belief",
    "Bernoulli",
    "Beta",
    "Normal",
    "Gamma",
    "NormalGamma",
    "StudentT",
    "FiniteMixture",
]

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_2PIE = math.log(2.0 * math.pi * math.e)

_WEIGHT_SUM_TOL = 1e-12
_MIXTURE_ENTROPY_NODES = 128


class Belief(ABC):
    """Common contract for all belief variants."""

    support: str

    @abstractmethod
    def mean(self):
        ...

    @abstractmethod
    def variance(self):
        ...

    @abstractmethod
    def entropy(self) -> float:
        """Shannon (discrete) or differential entropy in nats."""

    @abstractmethod
    def logpdf(self, z):
        """Log density (or log mass) at z; vectorized over arrays."""

    @abstractmethod
    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        """n i.i.d. draws using the given stream."""


def _require_positive(name: str, value: float) -> None:
    if not value > 0.0:
        raise ValueError(f"{name} must be strictly positive, got {value}")


@dataclass(frozen=True)
class Bernoulli(Belief):
    p: float
    support = "binary"

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"Bernoulli probability must lie in [0, 1], got {self.p}")

    def mean(self) -> float:
        return self.p

    def variance(self) -> float:
        return self.p * (1.0 - self.p)

    def entropy(self) -> float:
        p = self.p
        if p <= 0.0 or p >= 1.0:
            return 0.0
        return -p * math.log(p) - (1.0 - p) * math.log(1.0 - p)

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        if not np.all((z == 0.0) | (z == 1.0)):
            raise ValueError("Bernoulli outcomes must be 0 or 1")
        with np.errstate(divide="ignore"):
            out = np.where(z == 1.0, np.log(self.p), np.log1p(-self.p))
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        return rng.bernoulli(self.p, n)


@dataclass(frozen=True)
class Beta(Belief):
    alpha: float
    beta: float
    support = "unit"

    def __post_init__(self):
        _require_positive("Beta alpha", self.alpha)
        _require_positive("Beta beta", self.beta)

    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    def variance(self) -> float:
        s = self.alpha + self.beta
        return self.alpha * self.beta / (s * s * (s + 1.0))

    def entropy(self) -> float:
        a, b = self.alpha, self.beta
        return (
            lbeta(a, b)
            - (a - 1.0) * digamma(a)
            - (b - 1.0) * digamma(b)
            + (a + b - 2.0) * digamma(a + b)
        )

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        with np.errstate(divide="ignore"):
            out = (
                (self.alpha - 1.0) * np.log(z)
                + (self.beta - 1.0) * np.log1p(-z)
                - lbeta(self.alpha, self.beta)
            )
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        return rng.beta(self.alpha, self.beta, n)


@dataclass(frozen=True)
class Normal(Belief):
    mu: float
    sigma2: float
    support = "real"

    def __post_init__(self):
        _require_positive("Normal variance", self.sigma2)

    def mean(self) -> float:
        return self.mu

    def variance(self) -> float:
        return self.sigma2

    def entropy(self) -> float:
        return 0.5 * math.log(2.0 * math.pi * math.e * self.sigma2)

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        out = -0.5 * (_LOG_2PI + math.log(self.sigma2)) - (z - self.mu) ** 2 / (2.0 * self.sigma2)
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        return rng.normal(n, self.mu, math.sqrt(self.sigma2))


@dataclass(frozen=True)
class Gamma(Belief):
    shape: float
    rate: float
    support = "positive"

    def __post_init__(self):
        _require_positive("Gamma shape", self.shape)
        _require_positive("Gamma rate", self.rate)

    def mean(self) -> float:
        return self.shape / self.rate

    def variance(self) -> float:
        return self.shape / (self.rate * self.rate)

    def entropy(self) -> float:
        a, b = self.shape, self.rate
        return a - math.log(b) + lgamma(a) + (1.0 - a) * digamma(a)

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        with np.errstate(divide="ignore"):
            out = (
                self.shape * math.log(self.rate)
                - lgamma(self.shape)
                + (self.shape - 1.0) * np.log(z)
                - self.rate * z
            )
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        return rng.gamma(self.shape, n, rate=self.rate)


@dataclass(frozen=True)
class StudentT(Belief):
    df: float
    loc: float
    scale: float
    support = "real"

    def __post_init__(self):
        _require_positive("StudentT df", self.df)
        _require_positive("StudentT scale", self.scale)

    def mean(self) -> float:
        return self.loc if self.df > 1.0 else math.nan

    def variance(self) -> float:
        if self.df > 2.0:
            return self.scale**2 * self.df / (self.df - 2.0)
        # 1 < df <= 2: variance diverges; df <= 1: undefined.
        return math.inf if self.df > 1.0 else math.nan

    def entropy(self) -> float:
        nu = self.df
        return math.log(self.scale * math.sqrt(nu) * math.exp(lbeta(nu / 2.0, 0.5))) + (
            (nu + 1.0) / 2.0
        ) * (digamma((nu + 1.0) / 2.0) - digamma(nu / 2.0))

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        nu = self.df
        t = (z - self.loc) / self.scale
        out = (
            -lbeta(nu / 2.0, 0.5)
            - 0.5 * math.log(nu)
            - math.log(self.scale)
            - (nu + 1.0) / 2.0 * np.log1p(t * t / nu)
        )
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        return rng.student_t(self.df, n, loc=self.loc, scale=self.scale)


@dataclass(frozen=True)
class NormalGamma(Belief):
    """Joint belief over (mu, lam): lam ~ Gamma(alpha, beta), mu | lam ~ N(m, 1/(kappa lam)).

    Bivariate: mean/variance return length-2 arrays of the marginal
    moments, logpdf expects points with trailing dimension 2, and sample
    returns an (n, 2) array of (mu, lam) pairs.
    """

    m: float
    kappa: float
    alpha: float
    beta: float
    support = "real_positive_pair"

    def __post_init__(self):
        _require_positive("NormalGamma kappa", self.kappa)
        _require_positive("NormalGamma alpha", self.alpha)
        _require_positive("NormalGamma beta", self.beta)

    def mean(self) -> np.ndarray:
        return np.array([self.m, self.alpha / self.beta])

    def variance(self) -> np.ndarray:
        mu_var = (
            self.beta / (self.kappa * (self.alpha - 1.0)) if self.alpha > 1.0 else math.inf
        )
        return np.array([mu_var, self.alpha / self.beta**2])

    def entropy(self) -> float:
        # H[lam] + E_lam[H[mu | lam]] with E[ln lam] = psi(alpha) - ln beta.
        gamma_part = Gamma(self.alpha, self.beta).entropy()
        return gamma_part + 0.5 * math.log(2.0 * math.pi * math.e / self.kappa) - 0.5 * (
            digamma(self.alpha) - math.log(self.beta)
        )

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        if z.shape[-1] != 2:
            raise ValueError("NormalGamma points must have trailing dimension 2")
        mu, lam = z[..., 0], z[..., 1]
        with np.errstate(divide="ignore"):
            normal_part = 0.5 * (np.log(self.kappa * lam) - _LOG_2PI) - 0.5 * self.kappa * lam * (
                mu - self.m
            ) ** 2
            gamma_part = Gamma(self.alpha, self.beta).logpdf(lam)
        out = normal_part + gamma_part
        return out if out.ndim else float(out)

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        lam = rng.gamma(self.alpha, n, rate=self.beta)
        mu = self.m + rng.normal(n) / np.sqrt(self.kappa * lam)
        return np.column_stack([mu, lam])


class FiniteMixture(Belief):
    """Finite mixture of beliefs sharing a common support."""

    def __init__(self, weights, components):
        weights = tuple(float(w) for w in weights)
        components = tuple(components)
        if len(weights) != len(components) or not components:
            raise ValueError("weights and components must be nonempty and equal-length")
        if any(w < 0.0 for w in weights):
            raise ValueError("mixture weights must be nonnegative")
        if abs(sum(weights) - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"mixture weights must sum to 1, got {sum(weights)}")
        supports = {c.support for c in components}
        if len(supports) != 1:
            raise ValueError(f"mixture components must share a support, got {supports}")
        self.weights = weights
        self.components = components
        self.support = components[0].support

    def __repr__(self) -> str:
        return f"FiniteMixture(weights={self.weights}, components={self.components})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteMixture)
            and self.weights == other.weights
            and self.components == other.components
        )

    def mean(self) -> float:
        return sum(w * c.mean() for w, c in zip(self.weights, self.components))

    def variance(self) -> float:
        m = self.mean()
        second = sum(
            w * (c.variance() + c.mean() ** 2) for w, c in zip(self.weights, self.components)
        )
        return second - m * m

    def logpdf(self, z):
        z = np.asarray(z, dtype=np.float64)
        stacked = np.stack(
            [math.log(w) + c.logpdf(z) if w > 0.0 else np.full(z.shape, -np.inf)
             for w, c in zip(self.weights, self.components)]
        )
        out = np.logaddexp.reduce(stacked, axis=0)
        return out if out.ndim else float(out)

    def entropy(self) -> float:
        if self.support == "binary":
            return Bernoulli(self.mean()).entropy()
        if all(isinstance(c, Normal) for c in self.components):
            # E[-ln q] split over components, each integrated by Gauss-Hermite.
            nodes, base_w = np.polynomial.hermite.hermgauss(_MIXTURE_ENTROPY_NODES)
            total = 0.0
            for w, c in zip(self.weights, self.components):
                if w == 0.0:
                    continue
                z = c.mu + math.sqrt(2.0 * c.sigma2) * nodes
                total += w * float(np.sum(base_w * -self.logpdf(z)) / math.sqrt(math.pi))
            return total
        raise NotImplementedError(
            "mixture entropy is implemented for binary and all-Normal mixtures only"
        )

    def sample(self, rng: RngStream, n: int) -> np.ndarray:
        idx = rng.categorical(np.asarray(self.weights), n)
        out = np.empty(n, dtype=np.float64)
        for k, comp in enumerate(self.components):
            mask = idx == k
            count = int(mask.sum())
            if count:
                out[mask] = comp.sample(rng, count)
        return out
