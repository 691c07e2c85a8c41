"""Head approximation: periodic window family, blocks, and the slice solver.

The projector removes a periodic run of ``delta`` positions from the ground
set (one of ``lam + 1`` phase-shifted choices), which caps every remaining
block at ``lam * delta`` positions.  Each slice then decomposes into blocks
that an exact solver handles independently, and a global top-k selection of
marginal gains stitches the per-block budgets together.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Protocol

import numpy as np

from . import dp
from .model import as_weights, objective

__all__ = [
    "BlockDecomposition",
    "BlockSolver",
    "Window",
    "WindowFamily",
    "block_decompose",
    "coverage_best_window",
    "head_project",
    "make_window",
    "slice_solve",
]


class BlockTable(Protocol):
    """What the per-block exact solver must hand back."""

    values: np.ndarray

    def support(self, ell: int) -> tuple[int, ...]: ...


# An exact block solver maps (weights, budget, delta) to a level table.
BlockSolver = Callable[[np.ndarray, int, int], "BlockTable"]


@dataclass(frozen=True)
class WindowFamily:
    """The ``lam + 1`` phase-shifted keep-sets over ``[n]``.

    Membership of index ``i`` in window ``nu`` is a closed-form test on
    ``(i - 1) mod b`` with period ``b = (lam + 1) * delta``; the sets are
    never materialized.  Every index is dropped by exactly one window, so
    each index belongs to exactly ``lam`` of the ``lam + 1`` sets.
    """

    n: int
    delta: int
    lam: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.delta < 1 or self.lam < 1:
            raise ValueError("n, delta and lam must all be >= 1")

    @property
    def period(self) -> int:
        return (self.lam + 1) * self.delta

    def drop_phase(self, indices: np.ndarray) -> np.ndarray:
        """For each 1-based index, the unique nu whose window drops it."""
        return ((indices - 1) % self.period) // self.delta

    def window(self, nu: int) -> "Window":
        if not 0 <= nu <= self.lam:
            raise ValueError(f"nu={nu} outside [0, {self.lam}]")
        return Window(self, nu)


@dataclass(frozen=True)
class Window:
    """One member set of a :class:`WindowFamily`, exposed as a predicate."""

    family: WindowFamily
    nu: int

    def contains(self, i: int) -> bool:
        if not 1 <= i <= self.family.n:
            return False
        return ((i - 1) % self.family.period) // self.family.delta != self.nu

    def mask(self, indices: np.ndarray) -> np.ndarray:
        """Vectorized membership test for an array of 1-based indices."""
        return self.family.drop_phase(np.asarray(indices)) != self.nu

    def iter_members(self):
        """Lazy iteration over the member indices (test helper)."""
        for i in range(1, self.family.n + 1):
            if self.contains(i):
                yield i


def make_window(n: int, delta: int, lam: int, nu: int) -> Window:
    """Constant-time-membership view of keep-set ``nu``."""
    return WindowFamily(n, delta, lam).window(nu)


def coverage_best_window(z, windows: WindowFamily) -> tuple[int, float]:
    """The window retaining the most mass of ``z``.

    The kept mass is always at least ``lam / (lam + 1)`` of the total: each
    index is dropped by exactly one window, so the cheapest drop costs at
    most the average ``total / (lam + 1)``.
    """
    z = as_weights(z)
    if z.size != windows.n:
        raise ValueError(f"vector length {z.size} != family n {windows.n}")
    phases = windows.drop_phase(np.arange(1, windows.n + 1))
    dropped = np.bincount(phases, weights=z, minlength=windows.lam + 1)
    nu = int(np.argmin(dropped))
    total = float(z.sum())
    return nu, total - float(dropped[nu])


def _membership(selectable) -> Callable[[np.ndarray], np.ndarray]:
    """Normalize a selectable-set spec to a vectorized membership predicate.

    Accepts a :class:`Window`, any callable mask, an explicit index
    collection, or ``None`` for the full ground set.
    """
    if selectable is None:
        return lambda idx: np.ones(len(idx), dtype=bool)
    mask = getattr(selectable, "mask", None)
    if mask is not None:
        return mask
    if callable(selectable):
        return selectable
    members = np.unique(np.asarray(list(selectable), dtype=np.int64))
    return lambda idx: np.isin(idx, members)


@dataclass
class BlockDecomposition:
    """Blocks of a selectable set: spanning intervals, budgets and members.

    ``blocks[t]`` is the 1-based inclusive interval spanned by the t-th
    chain of selectable nonzero-weight indices in which consecutive members
    are less than ``delta`` apart; ``budgets[t]`` is ``p * ceil(len/delta)``
    and ``members[t]`` the chain itself.
    """

    blocks: list[tuple[int, int]]
    budgets: list[int]
    members: list[np.ndarray]


def block_decompose(selectable, x, delta: int, p: int = 1) -> BlockDecomposition:
    """Split the selectable nonzero indices of ``x`` into blocks.

    Selectable indices with zero weight form no block; distinct blocks are
    at least ``delta`` apart, so they can be solved independently.
    """
    x = as_weights(x)
    if delta < 1 or p < 1:
        raise ValueError("delta and p must be >= 1")
    nonzero = np.flatnonzero(x) + 1
    if nonzero.size == 0:
        return BlockDecomposition([], [], [])
    keep = np.asarray(_membership(selectable)(nonzero), dtype=bool)
    chain_pool = nonzero[keep]
    if chain_pool.size == 0:
        return BlockDecomposition([], [], [])
    cuts = np.flatnonzero(np.diff(chain_pool) >= delta)
    chains = np.split(chain_pool, cuts + 1)
    blocks: list[tuple[int, int]] = []
    budgets: list[int] = []
    for chain in chains:
        lo, hi = int(chain[0]), int(chain[-1])
        blocks.append((lo, hi))
        budgets.append(p * math.ceil((hi - lo + 1) / delta))
    return BlockDecomposition(blocks, budgets, chains)


def _default_solver(p: int, solver: BlockSolver | None) -> BlockSolver:
    if solver is not None:
        return solver
    if p == 1:
        return dp.build_table_1spike
    if p == 2:
        return dp.build_table_2spike
    raise ValueError(f"no built-in exact solver for p={p}; pass one explicitly")


def slice_solve(
    selectable,
    x,
    k: int,
    delta: int,
    p: int = 1,
    solver: BlockSolver | None = None,
) -> tuple[int, ...]:
    """Solve the projection restricted to ``selectable`` exactly.

    Per block the exact solver produces optima for every budget level; the
    level-to-level gains are non-increasing, so picking the ``k`` largest
    gains globally (ties broken by ascending block id, then level) yields
    per-block budgets whose union is an optimal solution.  Zero gains are
    dropped after selection.
    """
    x = as_weights(x)
    if k <= 0:
        return ()
    solve = _default_solver(p, solver)
    dec = block_decompose(selectable, x, delta, p)
    if not dec.blocks:
        return ()

    tables: list[tuple[int, BlockTable]] = []
    gains: list[tuple[float, int, int]] = []
    for t, ((lo, hi), members) in enumerate(zip(dec.blocks, dec.members)):
        w = np.zeros(hi - lo + 1)
        w[members - lo] = x[members - 1]
        # Levels beyond k can never survive the global selection.
        budget = min(dec.budgets[t], k)
        table = solve(w, budget, delta)
        tables.append((lo, table))
        level_vals = table.values
        prev = 0.0
        for ell in range(1, budget + 1):
            gains.append((float(level_vals[ell - 1]) - prev, -t, -ell))
            prev = float(level_vals[ell - 1])

    picked = heapq.nlargest(k, gains)
    per_block: Counter[int] = Counter()
    for q, neg_t, _neg_ell in picked:
        if q > 0.0:
            per_block[-neg_t] += 1

    solution: list[int] = []
    for t, (lo, table) in enumerate(tables):
        j = per_block.get(t, 0)
        if j:
            solution.extend(local + lo - 1 for local in table.support(j))
    return tuple(sorted(solution))


def head_project(
    x,
    k: int,
    delta: int,
    p: int,
    epsilon: float,
    solver: BlockSolver | None = None,
) -> tuple[int, ...]:
    """Projection capturing at least ``1 - 1/(lam+1)`` of the optimal mass.

    Runs the exact slice solver on each of the ``lam + 1`` keep-sets with
    ``lam = ceil(1/epsilon)`` and returns the best solution found.  Windows
    whose dropped run falls entirely beyond ``n`` all equal the full ground
    set, so that slice is solved only once.
    """
    x = as_weights(x)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if x.size == 0 or k <= 0:
        return ()
    lam = math.ceil(1.0 / epsilon)
    family = WindowFamily(x.size, delta, lam)
    best: tuple[int, ...] = ()
    best_val = 0.0
    full_solved = False
    for nu in range(lam + 1):
        if nu * delta + 1 > x.size:
            if full_solved:
                continue
            full_solved = True
        sol = slice_solve(family.window(nu), x, k, delta, p, solver)
        val = objective(x, sol)
        if val > best_val:
            best, best_val = sol, val
    return best
