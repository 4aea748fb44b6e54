"""Instance model: edges, multigraph interdiction instances, edge sets and
truncated weights.

All lambda-dependent quantities are ``fractions.Fraction``; input weights,
costs and the budget are plain ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, TextIO

Rational = Fraction
EdgeSet = tuple  # sorted tuple of edge ids


class InstanceError(ValueError):
    """Malformed instance; ``line`` is the 1-based input line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def edge_set(ids: Iterable[int]) -> EdgeSet:
    return tuple(sorted(set(ids)))


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    weight: int
    cost: int

    def __post_init__(self):
        if self.u == self.v:
            raise InstanceError(f"edge {self.id} is a self-loop at vertex {self.u}")
        if self.weight < 0:
            raise InstanceError(f"edge {self.id} has negative weight {self.weight}")
        if self.cost < 1:
            raise InstanceError(f"edge {self.id} has cost {self.cost}; costs must be >= 1")


@dataclass(frozen=True)
class GroundSet:
    """Weights, costs and budget over an abstract ground set {0..m-1}."""

    weights: tuple[int, ...]
    costs: tuple[int, ...]
    budget: int

    def __post_init__(self):
        if len(self.weights) != len(self.costs):
            raise InstanceError("weights and costs differ in length")
        if any(w < 0 for w in self.weights):
            raise InstanceError("weights must be >= 0")
        if any(c < 1 for c in self.costs):
            raise InstanceError("costs must be >= 1")
        if self.budget < 0:
            raise InstanceError("budget must be >= 0")

    @property
    def m(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class InterdictionInstance:
    n: int
    edges: tuple[Edge, ...]
    budget: int

    def __post_init__(self):
        if self.n < 2:
            raise InstanceError(f"need at least 2 vertices, got {self.n}")
        if self.budget < 0:
            raise InstanceError(f"budget must be >= 0, got {self.budget}")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InstanceError(f"edge ids must be 0..m-1 in order; position {i} has id {e.id}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise InstanceError(f"edge {i} endpoint out of range [0, {self.n})")

    @classmethod
    def from_tuples(cls, n: int, edges: Iterable[Sequence[int]], budget: int) -> InterdictionInstance:
        """Build from ``(u, v, w, c)`` tuples with 0-based vertices."""
        return cls(n, tuple(Edge(i, u, v, w, c) for i, (u, v, w, c) in enumerate(edges)), budget)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(e.weight for e in self.edges)

    @property
    def costs(self) -> tuple[int, ...]:
        return tuple(e.cost for e in self.edges)

    @property
    def endpoints(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def relabeled(self, order: Sequence[int]) -> InterdictionInstance:
        """Instance whose i-th edge is the ``order[i]``-th edge of this one."""
        return InterdictionInstance.from_tuples(
            self.n,
            [(self.edges[j].u, self.edges[j].v, self.edges[j].weight, self.edges[j].cost) for j in order],
            self.budget,
        )


def truncate_weights(inst, lam) -> list[Fraction]:
    """Per-element ``min(w(e), lam * c(e))``.

    ``inst`` is anything exposing ``weights`` and ``costs``.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError(f"lambda must be non-negative, got {lam}")
    return [min(Fraction(w), lam * c) for w, c in zip(inst.weights, inst.costs)]


def _check_ids(S, m: int) -> None:
    for e in S:
        if not 0 <= e < m:
            raise IndexError(f"edge id {e} out of range [0, {m})")


def set_weight(inst, S: Iterable[int], weights: Sequence) -> Fraction:
    S = tuple(S)
    _check_ids(S, inst.m)
    return sum((Fraction(weights[e]) for e in S), Fraction(0))


def set_cost(inst, S: Iterable[int]) -> int:
    S = tuple(S)
    _check_ids(S, inst.m)
    costs = inst.costs
    return sum(costs[e] for e in S)


def integer_scale(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return ``(ints, den)`` with ``values[i] == ints[i] / den`` exactly."""
    den = 1
    for x in values:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in values], den


# ---------------------------------------------------------------- text format

def parse_instance(text: str) -> InterdictionInstance:
    """Parse ``n m b`` followed by ``m`` lines ``u v w c`` (1-based vertices).

    Blank lines and lines starting with ``#`` are skipped.
    """
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise InstanceError(f"expected integers, got {line!r}", lineno) from None
    if not rows:
        raise InstanceError("empty instance")
    lineno, header = rows[0]
    if len(header) != 3:
        raise InstanceError(f"header must be 'n m b', got {len(header)} fields", lineno)
    n, m, b = header
    if n < 2:
        raise InstanceError(f"need at least 2 vertices, got {n}", lineno)
    if m < 0 or b < 0:
        raise InstanceError("m and b must be non-negative", lineno)
    if len(rows) - 1 != m:
        raise InstanceError(f"header declares {m} edges, found {len(rows) - 1}", lineno)
    edges = []
    for i, (lineno, fields) in enumerate(rows[1:]):
        if len(fields) != 4:
            raise InstanceError(f"edge line must be 'u v w c', got {len(fields)} fields", lineno)
        u, v, w, c = fields
        if not (1 <= u <= n and 1 <= v <= n):
            raise InstanceError(f"vertex out of range 1..{n}", lineno)
        try:
            edges.append(Edge(i, u - 1, v - 1, w, c))
        except InstanceError as exc:
            raise InstanceError(str(exc), lineno) from None
    return InterdictionInstance(n, tuple(edges), b)


def read_instance(fh: TextIO) -> InterdictionInstance:
    return parse_instance(fh.read())


def format_instance(inst: InterdictionInstance, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{inst.n} {inst.m} {inst.budget}")
    lines.extend(f"{e.u + 1} {e.v + 1} {e.weight} {e.cost}" for e in inst.edges)
    return "\n".join(lines) + "\n"
