"""Exact dynamic-programming solvers for separated-sparsity projection.

Three solvers live here:

* :func:`dp_solve` -- the budgeted 1-spike solver, O(k n).
* :func:`dp_solve_unrestricted` -- budget-free 1-spike solver, O(n).
* :func:`dp_solve_2spike` -- the budgeted 2-spike solver, O(k delta n).

Each records boolean take-flags during the forward pass and reconstructs a
support per budget level by walking them back.  Ties in every max are broken
toward *not* taking the current index, so reconstructed supports are
deterministic and stable across runs.
"""

from __future__ import annotations

import numpy as np

from .model import as_weights

__all__ = [
    "DpTable1",
    "DpTable2",
    "build_table_1spike",
    "build_table_2spike",
    "dp_solve",
    "dp_solve_2spike",
    "dp_solve_unrestricted",
]


def _nearest_take(flags_row: np.ndarray, i: int) -> int:
    """Largest index i' <= i with flags_row[i'] set, or 0 if none.

    flags_row[0] is a dummy False, so 0 doubles as the "no take" sentinel.
    np.argmax short-circuits on booleans, so this costs only the distance
    scanned, not the row length.
    """
    seg = flags_row[i::-1]
    off = int(np.argmax(seg))
    return 0 if not seg[off] else i - off


class DpTable1:
    """Per-level optima plus take-flags of the 1-spike recurrence.

    ``values[ell-1]`` is the optimum with budget ``ell``; ``flags[ell][i]``
    records whether the level-``ell`` maximum at prefix ``i`` was attained
    by taking index ``i``.
    """

    def __init__(self, values: np.ndarray, flags: np.ndarray, delta: int):
        self.values = values
        self.flags = flags
        self.delta = delta

    def support(self, ell: int) -> tuple[int, ...]:
        """Reconstruct an optimal support for budget ``ell``."""
        if not 0 <= ell <= self.values.size:
            raise ValueError(f"level {ell} outside [0, {self.values.size}]")
        sol: list[int] = []
        i = self.flags.shape[1] - 1
        lev = ell
        while lev >= 1 and i >= 1:
            i = _nearest_take(self.flags[lev], i)
            if i == 0:
                break
            sol.append(i)
            i -= self.delta
            lev -= 1
        return tuple(reversed(sol))


def build_table_1spike(x, budget: int, delta: int) -> DpTable1:
    """Run the budgeted 1-spike recurrence on ``x`` for all levels <= budget."""
    x = as_weights(x)
    if delta < 1:
        raise ValueError("delta must be >= 1")
    n = x.size
    flags = np.zeros((budget + 1, n + 1), dtype=bool)
    values = np.zeros(budget)
    prev = np.zeros(n + 1)
    row = np.zeros(n + 1)
    for ell in range(1, budget + 1):
        if delta >= n:
            shifted = np.zeros(n)
        else:
            # prev[i - delta] for i = 1..n; out-of-range terms are 0.
            shifted = np.concatenate((np.zeros(delta), prev[1 : n - delta + 1]))
        cand = x + shifted
        np.maximum.accumulate(cand, out=row[1:])
        flags[ell, 1:] = cand > row[:-1]
        values[ell - 1] = row[n]
        prev, row = row, prev
    return DpTable1(values, flags, delta)


class DpTable2:
    """Per-level optima plus take-flags of the 2-spike recurrence.

    The forward state is (prefix r, recent-window width i, budget ell);
    ``flags[ell][r][i]`` marks a take at that state.
    """

    def __init__(self, values: np.ndarray, flags: np.ndarray, delta: int):
        self.values = values
        self.flags = flags
        self.delta = delta

    def support(self, ell: int) -> tuple[int, ...]:
        if not 0 <= ell <= self.values.size:
            raise ValueError(f"level {ell} outside [0, {self.values.size}]")
        delta = self.delta
        sol: list[int] = []
        r = self.flags.shape[1] - 1
        i = 1
        lev = ell
        while lev >= 1 and r >= 1:
            if i <= 1:
                # Width 0 aliases width 1; skips at width 1 walk straight
                # down the column, so jump to the nearest take.
                r = _nearest_take(self.flags[lev, :, 1], r)
                if r == 0:
                    break
                sol.append(r)
                lev -= 1
                r -= 1
                i = delta - 1
            elif self.flags[lev, r, i]:
                sol.append(r)
                lev -= 1
                r -= i
                i = delta - i
            else:
                r -= 1
                i -= 1
        return tuple(reversed(sol))


def build_table_2spike(x, budget: int, delta: int) -> DpTable1 | DpTable2:
    """Run the budgeted 2-spike recurrence on ``x`` for all levels <= budget.

    With ``delta == 1`` the window constraint is vacuous and the 1-spike
    recurrence at separation 1 solves the same problem, so we reuse it.
    """
    x = as_weights(x)
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if delta == 1:
        return build_table_1spike(x, budget, 1)
    n = x.size
    flags = np.zeros((budget + 1, n + 1, delta), dtype=bool)
    values = np.zeros(budget)
    P = np.zeros((delta, n + 1))
    V = np.zeros((delta, n + 1))
    for ell in range(1, budget + 1):
        # Width 1: the skip branch references the same column one step back,
        # which makes the column a running maximum.
        cand = x + P[delta - 1, :n]
        np.maximum.accumulate(cand, out=V[1, 1:])
        flags[ell, 1:, 1] = cand > V[1, :n]
        for i in range(2, delta):
            if i >= n:
                shifted = np.zeros(n)
            else:
                shifted = np.concatenate((np.zeros(i), P[delta - i, 1 : n - i + 1]))
            cand = x + shifted
            np.maximum(cand, V[i - 1, :n], out=V[i, 1:])
            flags[ell, 1:, i] = cand > V[i - 1, :n]
        values[ell - 1] = V[1, n]
        P, V = V, P
    return DpTable2(values, flags, delta)


def dp_solve(x, k: int, delta: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Budgeted 1-spike solver.

    Returns the optimal values for budgets 1..k together with one optimal
    support per budget.  Each support evaluates to its value exactly (the
    reconstruction replays the same floating-point additions).
    """
    table = build_table_1spike(x, k, delta)
    supports = [table.support(ell) for ell in range(1, k + 1)]
    return table.values, supports


def dp_solve_unrestricted(x, delta: int) -> tuple[float, tuple[int, ...]]:
    """Budget-free 1-spike solver; equivalent to any budget >= ceil(n/delta)."""
    x = as_weights(x)
    if delta < 1:
        raise ValueError("delta must be >= 1")
    n = x.size
    best = np.zeros(n + 1)
    flags = np.zeros(n + 1, dtype=bool)
    for i in range(1, n + 1):
        cand = x[i - 1] + (best[i - delta] if i > delta else 0.0)
        if cand > best[i - 1]:
            best[i] = cand
            flags[i] = True
        else:
            best[i] = best[i - 1]
    sol: list[int] = []
    i = n
    while i >= 1:
        i = _nearest_take(flags, i)
        if i == 0:
            break
        sol.append(i)
        i -= delta
    return float(best[n]), tuple(reversed(sol))


def dp_solve_2spike(x, k: int, delta: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Budgeted 2-spike solver; see :func:`dp_solve` for the return shape."""
    table = build_table_2spike(x, k, delta)
    supports = [table.support(ell) for ell in range(1, k + 1)]
    return table.values, supports
