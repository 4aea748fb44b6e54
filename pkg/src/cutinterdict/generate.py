"""Random connected multigraph instances."""
from __future__ import annotations

import random

from .instance import InterdictionInstance


def random_instance(n: int, m: int, wmax: int = 10, cmax: int = 10, bmax: int = 15, seed: int = 0,
                    wmin: int = 0, bmin: int = 0) -> InterdictionInstance:
    """Random spanning tree plus ``m - (n - 1)`` extra edges (parallel edges allowed)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if m < n - 1:
        raise ValueError(f"a connected graph on {n} vertices needs m >= {n - 1}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(pairs) < m:
        u, v = rng.sample(range(n), 2)
        pairs.append((u, v))
    rng.shuffle(pairs)
    edges = [(u, v, rng.randint(wmin, wmax), rng.randint(1, cmax)) for u, v in pairs]
    return InterdictionInstance.from_tuples(n, edges, rng.randint(bmin, bmax))
