"""Deletion knapsack: for a fixed feasible set, delete the heaviest subset
whose cost fits in the budget.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from .instance import EdgeSet, edge_set


@dataclass(frozen=True)
class DeletionResult:
    removed: EdgeSet
    residual: int
    exact: bool
    epsilon: Fraction | None = None


def _finish(items, chosen, exact, epsilon=None) -> DeletionResult:
    total = sum(w for _, w, _ in items)
    deleted = sum(items[i][1] for i in chosen)
    return DeletionResult(edge_set(items[i][0] for i in chosen), total - deleted, exact, epsilon)


def knapsack_exact(items: Sequence[tuple[int, int, int]], b: int) -> DeletionResult:
    """Exact minimum residual weight.

    ``items`` are ``(id, weight, cost)`` triples.  Dynamic program over the
    cost budget, clamped to the total cost of the items.
    """
    items = list(items)
    cap = min(b, sum(c for _, _, c in items))
    if cap < 0:
        raise ValueError("budget must be non-negative")
    best = [0] * (cap + 1)
    take = []
    for _, w, c in items:
        row = bytearray(cap + 1)
        if w > 0:
            for r in range(cap, c - 1, -1):
                cand = best[r - c] + w
                if cand > best[r]:
                    best[r] = cand
                    row[r] = 1
        take.append(row)
    chosen = []
    r = cap
    for i in range(len(items) - 1, -1, -1):
        if take[i][r]:
            chosen.append(i)
            r -= items[i][2]
    return _finish(items, chosen, exact=True)


def knapsack_fptas(items: Sequence[tuple[int, int, int]], b: int, epsilon) -> DeletionResult:
    """Deleted weight at least ``(1 - epsilon)`` times the optimum.

    Classical profit scaling: profits are floored to multiples of
    ``epsilon * pmax / k`` and a min-cost-per-profit DP is solved exactly.
    The residual guarantee is only additive (``epsilon`` times the optimal
    deleted weight).
    """
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    items = list(items)
    usable = [i for i, (_, w, c) in enumerate(items) if c <= b and w > 0]
    if not usable:
        return _finish(items, [], exact=False, epsilon=epsilon)
    pmax = max(items[i][1] for i in usable)
    scale = epsilon * pmax / len(usable)
    profit = [floor(items[i][1] / scale) for i in usable]
    top = sum(profit)
    INF = b + 1
    cost = [0] + [INF] * top
    take = []
    for j, i in enumerate(usable):
        p, c = profit[j], items[i][2]
        row = bytearray(top + 1)
        for q in range(top, p - 1, -1):
            cand = cost[q - p] + c
            if cand < cost[q]:
                cost[q] = cand
                row[q] = 1
        take.append(row)
    q = max(q for q in range(top + 1) if cost[q] <= b)
    chosen = []
    for j in range(len(usable) - 1, -1, -1):
        if take[j][q]:
            chosen.append(usable[j])
            q -= profit[j]
    return _finish(items, chosen, exact=False, epsilon=epsilon)
