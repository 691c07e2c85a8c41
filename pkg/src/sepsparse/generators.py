"""Seeded random instance generators for the benchmark protocols."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .seeding import make_rng

__all__ = ["GenSpec", "gen_poisson", "gen_uniform"]


@dataclass(frozen=True)
class GenSpec:
    """Declarative description of a random instance."""

    kind: str
    n: int
    seed: int
    expected_gap: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "poisson"):
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.kind == "poisson":
            if self.expected_gap is None or self.expected_gap < 1:
                raise ValueError("poisson instances need expected_gap >= 1")

    def generate(self) -> np.ndarray:
        if self.kind == "uniform":
            return gen_uniform(self.n, self.seed)
        x, _ = gen_poisson(self.n, float(self.expected_gap), self.seed)
        return x


def gen_uniform(n: int, seed: int) -> np.ndarray:
    """n i.i.d. values uniform in [0, 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return make_rng(seed).random(n)


def gen_poisson(n: int, expected_gap: float, seed: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Sparse spike train with exponential inter-arrival gaps.

    Each gap is an Exponential draw with the given mean, rounded to the
    nearest integer with a floor of 1; positions accumulate until they pass
    n.  Spike entries are uniform in [0, 1), everything else exactly 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if expected_gap < 1:
        raise ValueError("expected_gap must be >= 1")
    rng = make_rng(seed)
    # Chunked draws: the chunk size depends only on (n, expected_gap), so
    # the stream of consumed variates is deterministic per seed.
    chunk = max(16, int(2 * n / expected_gap) + 8)
    positions: list[int] = []
    pos = 0
    while pos <= n:
        gaps = np.maximum(1, np.rint(rng.exponential(expected_gap, size=chunk))).astype(np.int64)
        for g in gaps:
            pos += int(g)
            if pos > n:
                break
            positions.append(pos)
        else:
            continue
        break
    values = rng.random(len(positions))
    x = np.zeros(n)
    if positions:
        x[np.asarray(positions) - 1] = values
    return x, tuple(positions)
