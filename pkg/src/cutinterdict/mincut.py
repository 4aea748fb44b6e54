"""Global minimum cut of an undirected multigraph (Stoer-Wagner), exact."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .instance import EdgeSet, integer_scale


@dataclass(frozen=True)
class CutResult:
    value: Fraction
    side: frozenset  # the shore not containing vertex 0
    cut_edges: EdgeSet

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.side))


def canonical_side(n: int, side: Iterable[int]) -> frozenset:
    side = frozenset(side)
    if 0 in side:
        side = frozenset(range(n)) - side
    if not side or len(side) >= n:
        raise ValueError("a cut shore must be a nonempty proper subset of the vertices")
    return side


def cut_from_side(n: int, edges: Sequence[tuple], side: Iterable[int]) -> CutResult:
    """Build the cut induced by ``side``; ``edges`` are ``(u, v, capacity)``."""
    side = canonical_side(n, side)
    crossing = tuple(i for i, (u, v, _) in enumerate(edges) if (u in side) != (v in side))
    value = sum((Fraction(edges[i][2]) for i in crossing), Fraction(0))
    return CutResult(value, side, crossing)


def global_min_cut(n: int, edges: Sequence[tuple]) -> CutResult:
    """Minimum over all nontrivial bipartitions of the crossing capacity.

    ``edges`` is a list of ``(u, v, capacity)`` with non-negative rational
    capacities; parallel edges are allowed.  Ties resolve to the first
    minimum-cut phase reaching the minimum.
    """
    if n < 2:
        raise ValueError(f"global min cut needs n >= 2, got {n}")
    caps, den = integer_scale([cap for _, _, cap in edges])
    if any(c < 0 for c in caps):
        raise ValueError("capacities must be non-negative")

    adj: list[dict[int, int]] = [dict() for _ in range(n)]
    for (u, v, _), c in zip(edges, caps):
        adj[u][v] = adj[u].get(v, 0) + c
        adj[v][u] = adj[v].get(u, 0) + c

    groups = {v: [v] for v in range(n)}
    alive = list(range(n))
    best_value = None
    best_side: list[int] = []

    while len(alive) > 1:
        # minimum cut phase: maximum-adjacency ordering from alive[0]
        weight = {v: 0 for v in alive}
        in_a = set()
        prev = last = alive[0]
        for _ in range(len(alive)):
            cand = max((v for v in alive if v not in in_a), key=lambda v: (weight[v], -v))
            in_a.add(cand)
            prev, last = last, cand
            for nb, c in adj[cand].items():
                if nb not in in_a:
                    weight[nb] += c
        phase_value = weight[last]
        if best_value is None or phase_value < best_value:
            best_value = phase_value
            best_side = list(groups[last])
        # merge last into prev
        for nb, c in adj[last].items():
            if nb == prev:
                continue
            adj[prev][nb] = adj[prev].get(nb, 0) + c
            adj[nb][prev] = adj[nb].get(prev, 0) + c
            del adj[nb][last]
        adj[prev].pop(last, None)
        adj[last] = {}
        groups[prev].extend(groups.pop(last))
        alive.remove(last)

    result = cut_from_side(n, edges, best_side)
    assert result.value == Fraction(best_value, den)
    return result
