"""Interdiction engine.

Pipeline for a feasible family F over a weighted ground set:

1. zero-optimum check: if some member can be reduced to residual 0 within
   budget, return it;
2. find the smallest maximizer ``lambda*`` of the Lagrangian dual;
3. list every member with truncated weight strictly below ``2 L(lambda*)``;
   the optimal interdicted member is guaranteed to be among them;
4. solve the deletion knapsack on each candidate and keep the best.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol, Sequence

from .enumeration import (
    DEFAULT_REPETITION_CAP, EXHAUSTIVE_LIMIT, EnumerationError, enumerate_contraction,
    enumerate_exhaustive, passes,
)
from .instance import EdgeSet, GroundSet, InterdictionInstance, edge_set, truncate_weights
from .knapsack import DeletionResult, knapsack_exact, knapsack_fptas
from .lagrangian import LambdaCertificate, find_lambda_star
from .mincut import global_min_cut


class InternalError(RuntimeError):
    """A guaranteed property failed; carries the dual certificate when available."""

    def __init__(self, message: str, certificate: LambdaCertificate | None = None):
        super().__init__(message)
        self.certificate = certificate


class FamilyOracle(Protocol):
    def minimize(self, weights: Sequence[Fraction]) -> tuple[Fraction, EdgeSet]: ...

    def enumerate_below(self, weights: Sequence[Fraction], threshold: Fraction, strict: bool,
                        seed: int) -> list[EdgeSet]: ...

    def min_cost_member(self, costs: Sequence[int]) -> tuple[int, EdgeSet]: ...


@dataclass
class Options:
    knapsack: str = "exact"  # or "fptas"
    epsilon: Fraction | None = None
    enum: str = "auto"  # auto | exhaustive | contraction
    exhaustive_limit: int = EXHAUSTIVE_LIMIT
    seed: int = 0
    delta: Fraction | None = None
    repetition_cap: int = DEFAULT_REPETITION_CAP
    strict: bool = True
    threads: int | None = None

    def __post_init__(self):
        if self.knapsack not in ("exact", "fptas"):
            raise ValueError(f"unknown knapsack mode {self.knapsack!r}")
        if (self.knapsack == "fptas") != (self.epsilon is not None):
            raise ValueError("epsilon is required for, and only for, the fptas knapsack")
        if self.epsilon is not None:
            self.epsilon = Fraction(self.epsilon)
            if not 0 < self.epsilon < 1:
                raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.enum not in ("auto", "exhaustive", "contraction"):
            raise ValueError(f"unknown enumeration method {self.enum!r}")


class GraphCutFamily:
    """All nontrivial cuts of a multigraph."""

    def __init__(self, inst: InterdictionInstance, options: Options | None = None):
        self.inst = inst
        self.options = options or Options()
        self.last_method = None
        self.last_repetitions = 0

    def _edges(self, caps):
        return [(e.u, e.v, cap) for e, cap in zip(self.inst.edges, caps)]

    def minimize(self, weights):
        cut = global_min_cut(self.inst.n, self._edges(weights))
        return cut.value, cut.cut_edges

    def min_cost_member(self, costs):
        cut = global_min_cut(self.inst.n, self._edges([Fraction(c) for c in costs]))
        return int(cut.value), cut.cut_edges

    def cut_family(self, weights, threshold, strict, seed, alpha=None):
        opts, n = self.options, self.inst.n
        edges = self._edges(weights)
        method = opts.enum
        if method == "auto":
            method = "exhaustive" if n <= opts.exhaustive_limit else "contraction"
        if method == "exhaustive":
            family = enumerate_exhaustive(n, edges, threshold, strict, limit=opts.exhaustive_limit)
        else:
            if alpha is None:
                alpha = max(Fraction(1), Fraction(threshold) / global_min_cut(n, edges).value)
            family = enumerate_contraction(
                n, edges, threshold, strict, alpha=alpha, seed=seed, delta=opts.delta,
                repetition_cap=opts.repetition_cap, threads=opts.threads)
        self.last_method, self.last_repetitions = family.method, family.repetitions
        return family

    def enumerate_below(self, weights, threshold, strict, seed):
        return [cut.cut_edges for cut in self.cut_family(weights, threshold, strict, seed).cuts]


class ExplicitFamily:
    """A finite family given as a list of edge sets."""

    def __init__(self, members):
        members = [edge_set(S) for S in members]
        if not members:
            raise ValueError("explicit family must be nonempty")
        if len(set(members)) != len(members):
            raise ValueError("explicit family members must be distinct")
        self.members = members
        self.last_method = "explicit"
        self.last_repetitions = 0

    @staticmethod
    def _weigh(S, weights):
        return sum((Fraction(weights[e]) for e in S), Fraction(0))

    def minimize(self, weights):
        return min(((self._weigh(S, weights), S) for S in self.members), key=lambda p: (p[0], len(p[1]), p[1]))

    def min_cost_member(self, costs):
        return min(((sum(costs[e] for e in S), S) for S in self.members), key=lambda p: (p[0], len(p[1]), p[1]))

    def enumerate_below(self, weights, threshold, strict, seed):
        return [S for S in self.members if passes(self._weigh(S, weights), threshold, strict)]


@dataclass
class Solution:
    value: int
    S: EdgeSet
    R: EdgeSet
    lambda_star: Fraction | None
    L_star: Fraction | None
    Lambda: Fraction | None
    candidates: int
    degenerate: bool
    certificate: LambdaCertificate | None = None
    enumeration: str | None = None
    repetitions: int = 0
    seed: int = 0
    knapsack: str = "exact"
    epsilon: Fraction | None = None
    strict: bool = True
    disconnected: bool = False
    table: list = field(default_factory=list)  # (S, DeletionResult) per candidate
    timings_ms: dict = field(default_factory=dict)

    def check(self, ground) -> None:
        w, c = ground.weights, ground.costs
        assert set(self.R) <= set(self.S), "R is not a subset of S"
        assert sum(c[e] for e in self.R) <= ground.budget, "deletion exceeds budget"
        assert self.value == sum(w[e] for e in set(self.S) - set(self.R)), "value != w(S - R)"
        if self.degenerate:
            assert self.value == 0


def _deletion(ground, S, options: Options) -> DeletionResult:
    items = [(e, ground.weights[e], ground.costs[e]) for e in S]
    if options.knapsack == "fptas":
        return knapsack_fptas(items, ground.budget, options.epsilon)
    return knapsack_exact(items, ground.budget)


def zero_optimum(ground, family):
    """``(S, R)`` with ``w(S - R) = 0`` and ``c(R) <= b`` if one exists, else None.

    Zero-weight elements never need deleting, so they are priced at 0 in the
    single min-cost query.  After this check the dual maximum is positive.
    """
    w = ground.weights
    masked = [ci if wi > 0 else 0 for wi, ci in zip(w, ground.costs)]
    cost, S = family.min_cost_member(masked)
    if cost > ground.budget:
        return None
    return edge_set(S), edge_set(e for e in S if w[e] > 0)


def _run(ground, family, options: Options) -> Solution:
    timings = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round((now - clock) * 1000, 3)
        clock = now

    common = dict(seed=options.seed, knapsack=options.knapsack, epsilon=options.epsilon,
                  strict=options.strict)

    zero = zero_optimum(ground, family)
    lap("degeneracy")
    if zero is not None:
        S, R = zero
        sol = Solution(0, S, R, None, None, None, 0, True,
                       disconnected=not S, timings_ms=timings, **common)
        sol.check(ground)
        return sol

    cert = find_lambda_star(ground, family)
    lap("lambda")
    if cert.Lambda <= 0:
        raise InternalError(f"dual maximum {cert.Lambda} is not positive after the zero-optimum check", cert)

    truncated = truncate_weights(ground, cert.lambda_star)
    threshold = 2 * cert.L_star
    candidates = family.enumerate_below(truncated, threshold, options.strict, options.seed)
    lap("enumerate")
    if not candidates:
        raise InternalError("no candidate below 2 L*; the dual witness should be one", cert)

    table = [(S, _deletion(ground, S, options)) for S in candidates]
    lap("knapsack")
    S, best = min(table, key=lambda row: (row[1].residual, len(row[0]), row[0]))
    sol = Solution(
        best.residual, S, best.removed, cert.lambda_star, cert.L_star, cert.Lambda,
        len(candidates), False, certificate=cert, enumeration=family.last_method,
        repetitions=family.last_repetitions, table=table, timings_ms=timings, **common,
    )
    sol.check(ground)
    if options.knapsack == "exact" and sol.value < cert.Lambda:
        raise InternalError(f"value {sol.value} below the dual bound {cert.Lambda}", cert)
    return sol


def solve(inst: InterdictionInstance, options: Options | None = None) -> Solution:
    options = options or Options()
    if options.enum == "exhaustive" and inst.n > options.exhaustive_limit:
        raise EnumerationError(
            f"n = {inst.n} exceeds the exhaustive limit {options.exhaustive_limit}; enable contraction")
    return _run(inst, GraphCutFamily(inst, options), options)


def solve_explicit(members, weights, costs, budget, options: Options | None = None) -> Solution:
    options = options or Options()
    ground = GroundSet(tuple(weights), tuple(costs), budget)
    family = ExplicitFamily(members)
    for S in family.members:
        if any(not 0 <= e < ground.m for e in S):
            raise ValueError(f"member {S} references an element outside 0..{ground.m - 1}")
    return _run(ground, family, options)
