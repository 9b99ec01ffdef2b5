"""Deterministic counter-based random number generation.

The core generator is SplitMix64: output i of a stream with seed s is
``mix64(s + (i+1) * GOLDEN)`` where ``mix64`` is the SplitMix64 finalizer.
Because each output depends only on (seed, index), the stream is
bit-reproducible across platforms and can be generated in vectorized
blocks. Samplers for the distributions the package needs are built on
top of the raw stream; every sampler consumes stream outputs in a fixed
order, so identical seeds and call sequences give identical draws.

A stream is single-owner. Parallel work derives independent child
streams via :meth:`RngStream.child`, which hashes a task index into the
seed.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream"]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1

# 2^-53; uniforms are ((u >> 11) + 0.5) * 2^-53, strictly inside (0, 1).
_U53 = 1.0 / 9007199254740992.0


def _mix64(values: np.ndarray) -> np.ndarray:
    z = values.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        z ^= z >> np.uint64(30)
        z *= _MIX_1
        z ^= z >> np.uint64(27)
        z *= _MIX_2
        z ^= z >> np.uint64(31)
    return z


def _mix64_int(value: int) -> int:
    return int(_mix64(np.array([value & _MASK64], dtype=np.uint64))[0])


class RngStream:
    """Counter-based SplitMix64 stream with vectorized samplers."""

    __slots__ = ("seed", "counter")

    def __init__(self, seed: int, counter: int = 0):
        if seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        self.seed = seed & _MASK64
        self.counter = counter

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, counter={self.counter})"

    def child(self, index: int) -> "RngStream":
        """Independent stream for parallel task `index`: seed XOR hash(index)."""
        return RngStream(self.seed ^ _mix64_int(index))

    def raw(self, n: int) -> np.ndarray:
        """Next n raw 64-bit outputs."""
        idx = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
        self.counter += n
        with np.errstate(over="ignore"):
            state = np.uint64(self.seed) + idx * _GOLDEN
        return _mix64(state)

    def uniform(self, n: int) -> np.ndarray:
        """n i.i.d. uniforms, strictly inside (0, 1)."""
        return ((self.raw(n) >> np.uint64(11)).astype(np.float64) + 0.5) * _U53

    def normal(self, n: int, mean: float = 0.0, sd: float = 1.0) -> np.ndarray:
        """Box-Muller normals (cosine branch only)."""
        u1 = self.uniform(n)
        u2 = self.uniform(n)
        z = np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
        return mean + sd * z

    def bernoulli(self, p: float, n: int) -> np.ndarray:
        return (self.uniform(n) < p).astype(np.int64)

    def gamma(self, shape: float, n: int, rate: float = 1.0) -> np.ndarray:
        """Marsaglia-Tsang gamma draws; shape < 1 handled by boosting."""
        if shape <= 0.0 or rate <= 0.0:
            raise ValueError("gamma requires shape > 0 and rate > 0")
        if shape < 1.0:
            boost = self.gamma(shape + 1.0, n)
            u = self.uniform(n)
            return boost * u ** (1.0 / shape) / rate
        d = shape - 1.0 / 3.0
        c = 1.0 / np.sqrt(9.0 * d)
        out = np.empty(n, dtype=np.float64)
        pending = np.arange(n)
        while pending.size:
            k = pending.size
            x = self.normal(k)
            v = (1.0 + c * x) ** 3
            u = self.uniform(k)
            with np.errstate(invalid="ignore", divide="ignore"):
                ok = (v > 0.0) & (
                    np.log(u) < 0.5 * x * x + d - d * v + d * np.log(np.where(v > 0.0, v, 1.0))
                )
            out[pending[ok]] = d * v[ok]
            pending = pending[~ok]
        return out / rate

    def beta(self, a: float, b: float, n: int) -> np.ndarray:
        x = self.gamma(a, n)
        y = self.gamma(b, n)
        return x / (x + y)

    def student_t(self, df: float, n: int, loc: float = 0.0, scale: float = 1.0) -> np.ndarray:
        """Compound normal/gamma draws: z / sqrt(g) with g ~ Gamma(df/2, df/2)."""
        z = self.normal(n)
        g = self.gamma(df / 2.0, n, rate=df / 2.0)
        return loc + scale * z / np.sqrt(g)

    def categorical(self, weights: np.ndarray, n: int) -> np.ndarray:
        edges = np.cumsum(np.asarray(weights, dtype=np.float64))
        edges[-1] = 1.0
        return np.searchsorted(edges, self.uniform(n), side="right")
