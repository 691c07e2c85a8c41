"""Core domain model for budgeted separated-sparsity projection.

Conventions used throughout the package:

* Weight vectors are 1-D float64 numpy arrays with non-negative entries
  (signed signals are squared entrywise before projection, see
  :func:`squared_weights`).
* A *support* is a strictly increasing tuple of 1-based indices.
* Feasibility for separation ``delta`` and spike count ``p`` uses the
  window rule: every ``delta`` consecutive positions may contain at most
  ``p`` chosen indices.  For ``p == 1`` this is exactly the pairwise rule
  ``|i - j| >= delta`` for distinct chosen ``i, j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MAX_BRUTE_FORCE_N",
    "InfeasibleParameters",
    "Instance",
    "as_signal",
    "as_support",
    "as_weights",
    "brute_force_solve",
    "is_feasible",
    "max_support_size",
    "objective",
    "restrict",
    "squared_weights",
]

# Exhaustive search refuses anything longer than this.
MAX_BRUTE_FORCE_N = 25


class InfeasibleParameters(ValueError):
    """No feasible support exists for the requested (n, k, delta, p)."""


def as_weights(x) -> np.ndarray:
    """Coerce ``x`` to a contiguous float64 vector of non-negative weights."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size and float(arr.min()) < 0.0:
        raise ValueError("weight vectors must be entrywise non-negative")
    return arr


def as_signal(v) -> np.ndarray:
    """Coerce ``v`` to a contiguous float64 vector (entries may be negative)."""
    arr = np.ascontiguousarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    return arr


def as_support(indices, n: int | None = None) -> tuple[int, ...]:
    """Normalize ``indices`` to a strictly increasing tuple of 1-based ints.

    Rejects duplicates, and rejects anything outside ``[1, n]`` when ``n``
    is given.
    """
    idx = sorted(int(i) for i in indices)
    for a, b in zip(idx, idx[1:]):
        if a == b:
            raise ValueError(f"support contains duplicate index {a}")
    if idx:
        if idx[0] < 1:
            raise ValueError(f"support index {idx[0]} below 1")
        if n is not None and idx[-1] > n:
            raise ValueError(f"support index {idx[-1]} exceeds n={n}")
    return tuple(idx)


@dataclass(frozen=True)
class Instance:
    """A projection problem: weights plus the feasibility parameters.

    ``x`` is the non-negative weight vector, ``k`` the sparsity budget,
    ``delta`` the separation, and ``spikes`` the per-window allowance.
    """

    x: np.ndarray
    k: int
    delta: int
    spikes: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_weights(self.x))
        if self.x.size < 1:
            raise ValueError("instance requires n >= 1")
        if self.k < 1 or self.delta < 1 or self.spikes < 1:
            raise ValueError("k, delta and spikes must all be >= 1")

    @property
    def n(self) -> int:
        return int(self.x.size)


def is_feasible(indices, n: int, k: int, delta: int, p: int = 1) -> bool:
    """Check that ``indices`` is a valid support of size <= k.

    The window rule is evaluated through its pairwise form: sorted indices
    ``i_1 < i_2 < ...`` satisfy it iff ``i_{j+p} - i_j >= delta`` for every
    ``j``.  Indices outside ``[1, n]`` raise ``ValueError``.
    """
    idx = as_support(indices, n)
    if len(idx) > k:
        return False
    for j in range(len(idx) - p):
        if idx[j + p] - idx[j] < delta:
            return False
    return True


def objective(x, indices) -> float:
    """Total weight of ``indices`` under ``x``; the empty support scores 0.

    Summation runs sequentially in ascending index order, which matches the
    accumulation order of the dynamic-programming solvers exactly.
    """
    arr = as_weights(x)
    total = 0.0
    for i in as_support(indices, arr.size):
        total += arr[i - 1]
    return total


def squared_weights(v) -> np.ndarray:
    """Entrywise square of a signed signal, yielding a weight vector."""
    arr = as_signal(v)
    return arr * arr


def restrict(v, indices) -> np.ndarray:
    """Keep ``v`` on ``indices`` and zero it elsewhere."""
    arr = as_signal(v)
    idx = as_support(indices, arr.size)
    out = np.zeros_like(arr)
    if idx:
        pos = np.asarray(idx, dtype=np.intp) - 1
        out[pos] = arr[pos]
    return out


def max_support_size(n: int, delta: int, p: int = 1) -> int:
    """Largest feasible support size on ``[n]`` for the given (delta, p)."""
    if n < 0:
        return 0
    # A window holds at most delta distinct positions, so p >= delta is vacuous.
    eff = min(p, delta)
    return eff * (n // delta) + min(eff, n % delta)


def brute_force_solve(inst: Instance) -> tuple[tuple[int, ...], float]:
    """Exhaustive-search oracle; the reference for every solver test.

    Enumerates all feasible subsets of the nonzero positions of size <= k
    and returns the best one.  Ties on the objective are broken toward the
    lexicographically smallest index sequence, so the output is a stable
    golden value.  Refuses ``n > 25``.
    """
    if inst.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {inst.n}")
    x, k, delta, p = inst.x, inst.k, inst.delta, inst.spikes
    nonzero = [int(i) + 1 for i in np.flatnonzero(x)]

    best: tuple[int, ...] = ()
    best_val = 0.0
    chosen: list[int] = []

    def extend(start: int, total: float) -> None:
        nonlocal best, best_val
        cand = tuple(chosen)
        if total > best_val or (total == best_val and cand < best):
            best, best_val = cand, total
        if len(chosen) == k:
            return
        for pos in range(start, len(nonzero)):
            i = nonzero[pos]
            # Adding i only interacts with the choice made p steps back.
            if len(chosen) >= p and i - chosen[-p] < delta:
                continue
            chosen.append(i)
            extend(pos + 1, total + x[i - 1])
            chosen.pop()

    extend(0, 0.0)
    assert is_feasible(best, inst.n, k, delta, p)
    return best, best_val
