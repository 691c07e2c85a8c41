"""Independent reference implementations shared across the test suite.

Everything here is deliberately written the slow, obvious way so that it
never shares code paths with the package internals it checks.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from sepsparse.model import Instance, brute_force_solve


def window_scan_feasible(indices, delta: int, p: int = 1) -> bool:
    """Literal window scan: every delta consecutive positions hold <= p."""
    idx = sorted(indices)
    if not idx:
        return True
    for a in range(idx[0] - delta + 1, idx[-1] + 1):
        if sum(1 for i in idx if a <= i <= a + delta - 1) > p:
            return False
    return True


def pairwise_feasible(indices, k: int, delta: int) -> bool:
    """Single-spike rule: size bound plus pairwise distance >= delta."""
    idx = sorted(indices)
    if len(idx) > k:
        return False
    return all(b - a >= delta for a, b in zip(idx, idx[1:]))


def direct_tail_vector(x, delta: int) -> np.ndarray:
    """O(n * delta) windowed sum, the oracle for the rolling computation."""
    x = np.asarray(x, dtype=float)
    n = x.size
    out = np.zeros(n)
    for i in range(1, n + 1):
        for j in range(i - delta + 1, i + delta):
            if 1 <= j <= n and j != i:
                out[i - 1] += x[j - 1]
    return out


def restricted_optimum(member_indices, x, k: int, delta: int, p: int = 1) -> float:
    """Exhaustive optimum of the projection restricted to a member set."""
    x = np.asarray(x, dtype=float)
    members = sorted(member_indices)
    best = 0.0
    for size in range(1, min(k, len(members)) + 1):
        for combo in combinations(members, size):
            ok = all(combo[j + p] - combo[j] >= delta for j in range(len(combo) - p))
            if ok:
                best = max(best, float(sum(x[i - 1] for i in combo)))
    return best


def oracle_value(x, k: int, delta: int, p: int = 1) -> float:
    _, value = brute_force_solve(Instance(np.asarray(x, dtype=float), k, delta, p))
    return float(value)
