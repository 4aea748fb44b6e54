"""Brute-force reference solver.

Scans every nontrivial bipartition of the vertex set directly and solves the
deletion knapsack on each cut.  Deliberately independent of the min-cut,
enumeration and dual machinery: only the instance model and the exact
knapsack are shared with the engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .instance import EdgeSet, InterdictionInstance, truncate_weights
from .knapsack import knapsack_exact

ORACLE_LIMIT = 16


class OracleLimitError(ValueError):
    pass


def all_cuts(inst: InterdictionInstance) -> list[EdgeSet]:
    """Edge sets of all ``2**(n-1) - 1`` bipartitions (vertex 0 fixed outside)."""
    n = inst.n
    if n > ORACLE_LIMIT:
        raise OracleLimitError(f"brute force is limited to n <= {ORACLE_LIMIT} (n = {n})")
    cuts = []
    for mask in range(1, 1 << (n - 1)):
        side = mask << 1
        cuts.append(tuple(e.id for e in inst.edges if ((side >> e.u) ^ (side >> e.v)) & 1))
    return cuts


@dataclass
class OracleReport:
    value: int
    best_S: EdgeSet
    best_R: EdgeSet
    table: list = field(default_factory=list)  # (cut edges, residual)
    lambda_grid: list = field(default_factory=list)  # (lambda, phi(lambda))


def brute_phi(inst: InterdictionInstance, lam, cuts=None) -> Fraction:
    """Dual function by direct minimisation over all cuts."""
    lam = Fraction(lam)
    wl = truncate_weights(inst, lam)
    cuts = all_cuts(inst) if cuts is None else cuts
    return min(sum((wl[e] for e in C), Fraction(0)) for C in cuts) - lam * inst.budget


def brute_solve(inst: InterdictionInstance, grid: Iterable = ()) -> OracleReport:
    cuts = all_cuts(inst)
    w, c = inst.weights, inst.costs
    table = []
    best = None
    for C in cuts:
        res = knapsack_exact([(e, w[e], c[e]) for e in C], inst.budget)
        table.append((C, res.residual))
        key = (res.residual, len(C), C)
        if best is None or key < best[0]:
            best = (key, C, res.removed)
    (value, _, _), S, R = best
    report = OracleReport(value, S, R, table)
    report.lambda_grid = [(Fraction(lam), brute_phi(inst, lam, cuts)) for lam in grid]
    return report
