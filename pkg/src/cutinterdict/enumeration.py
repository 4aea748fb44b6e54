"""Enumeration of nontrivial cuts below a capacity threshold.

Two enumerators share one result type: an exhaustive scan over all
``2**(n-1) - 1`` bipartitions (deterministic, small ``n`` only) and repeated
random contraction, which finds every cut below ``alpha`` times the minimum
with high probability.  Candidates from contraction are always re-verified
exactly, so randomness can only cost completeness, never soundness.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .instance import integer_scale
from .mincut import CutResult, cut_from_side, global_min_cut
from . import _kernels

EXHAUSTIVE_LIMIT = 20
DEFAULT_REPETITION_CAP = 10**6
THREADS_ENV = "CUTINTERDICT_THREADS"


class EnumerationError(ValueError):
    pass


@dataclass
class CutFamily:
    cuts: list[CutResult]
    threshold: Fraction
    strict: bool
    method: str
    repetitions: int = 0
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def keys(self) -> set[tuple[int, ...]]:
        return {cut.key for cut in self.cuts}


def passes(value, threshold, strict: bool) -> bool:
    return value < threshold if strict else value <= threshold


def _finish(n, edges, sides, threshold, strict) -> list[CutResult]:
    cuts = {}
    for side in sides:
        cut = cut_from_side(n, edges, side)
        if passes(cut.value, threshold, strict):
            cuts.setdefault(cut.key, cut)
    return sorted(cuts.values(), key=lambda cut: (cut.value, cut.key))


def enumerate_exhaustive(n: int, edges: Sequence[tuple], threshold, strict: bool = True,
                         limit: int = EXHAUSTIVE_LIMIT) -> CutFamily:
    """Every bipartition whose crossing capacity passes the threshold test."""
    threshold = Fraction(threshold)
    if n > limit:
        raise EnumerationError(
            f"exhaustive enumeration limited to n <= {limit} (n = {n}); use contraction")
    if n < 2:
        raise EnumerationError("need at least 2 vertices")
    caps, den = integer_scale([cap for _, _, cap in edges])
    # compare ints: value * den against threshold * den
    limit_num = threshold * den
    # masks over vertices 1..n-1; vertex 0 is never on the reported side
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64) << 1
    if sum(caps) < 2**62:
        values = np.zeros(masks.shape, dtype=np.int64)
        for (u, v, _), c in zip(edges, caps):
            if c:
                values += c * (((masks >> u) ^ (masks >> v)) & 1)
        bound = math.floor(limit_num)
        if strict and bound == limit_num:
            keep = values < bound
        else:
            keep = values <= bound
        selected = masks[keep]
    else:
        selected = [
            mask for mask in masks.tolist()
            if passes(sum(c for (u, v, _), c in zip(edges, caps) if (mask >> u ^ mask >> v) & 1),
                      limit_num, strict)
        ]
    sides = [[v for v in range(n) if (int(mask) >> v) & 1] for mask in selected]
    return CutFamily(_finish(n, edges, sides, threshold, strict), threshold, strict, "exhaustive")


def repetition_count(n: int, alpha, delta=None, cap: int = DEFAULT_REPETITION_CAP) -> int:
    """``ceil(n**(2 alpha) * ln(n**floor(2 alpha) / delta))``, capped."""
    alpha = Fraction(alpha)
    delta = Fraction(1, n) if delta is None else Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    k = math.floor(2 * alpha)
    log_reps = 2 * float(alpha) * math.log(n)
    inner = k * math.log(n) - math.log(float(delta))
    if log_reps + math.log(max(inner, 1e-300)) > math.log(cap):
        return cap
    return min(cap, max(1, math.ceil(math.exp(log_reps) * inner)))


def configured_threads() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    return int(raw) if raw else None


def enumerate_contraction(n: int, edges: Sequence[tuple], threshold, strict: bool = True,
                          alpha=2, seed: int = 0, delta=None,
                          repetition_cap: int = DEFAULT_REPETITION_CAP,
                          threads: int | None = None) -> CutFamily:
    """Cuts passing the threshold test, complete with probability >= 1 - delta.

    Each repetition contracts random capacity-weighted edges until
    ``ceil(2 alpha)`` supervertices remain and proposes every bipartition of
    them.  Repetition ``i`` draws from a SplitMix64 stream keyed by
    ``(seed, i)``, so the result does not depend on the thread count.
    """
    threshold = Fraction(threshold)
    alpha = Fraction(alpha)
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if global_min_cut(n, edges).value == 0:
        raise EnumerationError("minimum cut is zero (graph disconnected); contraction needs a positive minimum")
    groups = math.ceil(2 * alpha)
    if n <= groups:
        # nothing to contract; the scan is complete
        family = enumerate_exhaustive(n, edges, threshold, strict, limit=n)
        family.method, family.repetitions, family.seed = "contraction", 1, seed
        return family
    if groups > 24:
        raise EnumerationError(f"alpha = {alpha} needs {groups} supervertices; too many to scan")

    reps = repetition_count(n, alpha, delta, repetition_cap)
    us = np.array([u for u, _, _ in edges], dtype=np.int64)
    vs = np.array([v for _, v, _ in edges], dtype=np.int64)
    caps = np.array([float(cap) for _, _, cap in edges], dtype=np.float64)
    cum = np.cumsum(caps)
    # float prefilter with slack; exact check happens in _finish
    cutoff = float(threshold) * (1 + 1e-9) + 1e-12
    words = (n + 63) // 64

    threads = threads if threads is not None else configured_threads()
    if threads:
        _kernels.set_threads(threads)

    seen: set[bytes] = set()
    chunk = 1 << 15
    for start in range(0, reps, chunk):
        count = min(chunk, reps - start)
        sides, ok = _kernels.contract_batch(
            np.uint64(seed & 0xFFFFFFFFFFFFFFFF), start, count, n, groups, us, vs, caps, cum, cutoff, words)
        flat = sides.reshape(-1, words)[ok.reshape(-1)]
        if flat.size:
            for row in np.unique(flat, axis=0):
                seen.add(row.tobytes())

    vertex_sides = []
    for raw in sorted(seen):
        row = np.frombuffer(raw, dtype=np.uint64)
        vertex_sides.append([v for v in range(n) if (int(row[v >> 6]) >> (v & 63)) & 1])
    cuts = _finish(n, edges, vertex_sides, threshold, strict)
    return CutFamily(cuts, threshold, strict, "contraction", repetitions=reps, seed=seed,
                     extra={"proposed": len(seen)})
