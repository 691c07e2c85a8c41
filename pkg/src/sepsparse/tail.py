"""Tail approximations: leftover-mass guarantees of factor 2 and 1 + eps.

The refined algorithm classifies each index by comparing its weight against
the mass of its punctured radius-(delta-1) neighbourhood.  Indices that
dominate their neighbourhood ("strong") must appear in any optimum, pairwise
separation between them is automatic, and zeroing their weak neighbours (the
"reduced" vector) preserves the optimal value.  Running the head projector
over the reduced vector with the strong indices force-included in every
slice turns the head guarantee into a tail guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .head import WindowFamily, slice_solve
from .model import as_weights, objective

__all__ = [
    "TailProfile",
    "strong_and_reduced",
    "tail_bound_coefficient",
    "tail_project",
    "tail_vector",
    "topk_tail_project",
]


def tail_vector(x, delta: int) -> np.ndarray:
    """Neighbourhood mass around each index, excluding the index itself.

    Entry i sums x over positions within distance < delta of i (both
    directions), minus x_i.  Computed in O(n) from prefix sums, which is
    algebraically the rolling one-step update with out-of-range terms 0.
    """
    x = as_weights(x)
    if delta < 1:
        raise ValueError("delta must be >= 1")
    n = x.size
    prefix = np.concatenate(([0.0], np.cumsum(x)))
    positions = np.arange(1, n + 1)
    hi = np.minimum(positions + delta - 1, n)
    lo = np.maximum(positions - delta, 0)
    return prefix[hi] - prefix[lo] - x


@dataclass
class TailProfile:
    """Neighbourhood analysis of a weight vector at one separation.

    ``t`` is the tail vector, ``strong`` the indices with x_i > t_i,
    ``weak`` the rest, and ``r`` the reduced vector: x with every weak
    index within distance < delta of a strong index zeroed out.
    """

    t: np.ndarray
    strong: np.ndarray
    weak: np.ndarray
    r: np.ndarray


def strong_and_reduced(x, delta: int) -> TailProfile:
    """Classify indices as strong/weak and build the reduced vector.

    Strength is the strict comparison ``x_i > t_i``; entries equal to their
    neighbourhood mass count as weak.  Any two strong indices are at least
    ``delta`` apart.
    """
    x = as_weights(x)
    t = tail_vector(x, delta)
    strong_mask = x > t
    strong = np.flatnonzero(strong_mask) + 1
    weak = np.flatnonzero(~strong_mask) + 1
    r = x.copy()
    n = x.size
    for s in strong:
        lo = max(int(s) - delta, 0)
        hi = min(int(s) + delta - 1, n)
        r[lo:hi] = 0.0
        r[s - 1] = x[s - 1]
    return TailProfile(t=t, strong=strong, weak=weak, r=r)


def topk_tail_project(x, k: int, delta: int) -> tuple[int, ...]:
    """Best feasible subset of the k heaviest entries; leftover <= 2x optimal.

    Entry ties at the selection threshold are resolved toward lower
    indices.  Since the candidate set has at most k elements, the
    budget-free solver already respects the sparsity budget, keeping the
    whole routine linear.
    """
    from .dp import dp_solve_unrestricted

    x = as_weights(x)
    n = x.size
    if k <= 0 or n == 0:
        return ()
    if k >= n:
        keep = np.ones(n, dtype=bool)
    else:
        threshold = np.partition(x, n - k)[n - k]
        keep = x > threshold
        need = k - int(np.count_nonzero(keep))
        if need > 0:
            keep[np.flatnonzero(x == threshold)[:need]] = True
    restricted = np.where(keep, x, 0.0)
    _, sol = dp_solve_unrestricted(restricted, delta)
    return sol


def tail_project(x, k: int, delta: int, epsilon: float) -> tuple[int, ...]:
    """Projection leaving at most ``1 + eps`` times the optimal leftover mass.

    Builds the reduced vector, then runs the windowed slice loop at halved
    precision (``lam = ceil(2/epsilon)``) with the strong set merged into
    every slice; strong indices always land in singleton blocks of the
    reduced vector, so block sizes stay bounded.  Returns the slice solution
    with maximal reduced-vector mass.  Single-spike model only.
    """
    x = as_weights(x)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    n = x.size
    if n == 0 or k <= 0:
        return ()
    profile = strong_and_reduced(x, delta)
    lam = math.ceil(2.0 / epsilon)
    family = WindowFamily(n, delta, lam)
    strong = profile.strong
    best: tuple[int, ...] = ()
    best_val = 0.0
    full_solved = False
    for nu in range(lam + 1):
        if nu * delta + 1 > n:
            if full_solved:
                continue
            full_solved = True
        window = family.window(nu)

        def selectable(idx: np.ndarray, _w=window) -> np.ndarray:
            return _w.mask(idx) | np.isin(idx, strong)

        sol = slice_solve(selectable, profile.r, k, delta, p=1)
        val = objective(profile.r, sol)
        if val > best_val:
            best, best_val = sol, val
    return best


def tail_bound_coefficient(alpha: float, mu: float) -> float:
    """Leftover-mass ratio bound alpha / (1 - (1-alpha)/(1-mu*alpha)).

    Used only by the test suite to validate the tail analysis numerically;
    at ``alpha = 1 - eps/2`` and ``mu = 2/3`` it equals ``1 + eps`` exactly.
    """
    if not 0.0 < alpha < 1.0 or not 0.0 < mu < 1.0:
        raise ValueError("alpha and mu must lie strictly inside (0, 1)")
    denom_inner = 1.0 - mu * alpha
    if denom_inner <= 0.0:
        raise ZeroDivisionError("1 - mu*alpha must stay positive")
    return alpha / (1.0 - (1.0 - alpha) / denom_inner)
