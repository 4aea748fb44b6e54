"""Compiled inner loop for random contraction.

Randomness comes from SplitMix64; repetition ``i`` of a run with seed ``s``
starts from ``mix64(s ^ mix64(i + GOLDEN))`` so every repetition owns an
independent, reproducible stream.
"""
import os

import numba
import numpy as np
from numba import njit, prange

if "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is too old and only produces a warning
    numba.config.THREADING_LAYER = "omp"

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_INV53 = 1.0 / 9007199254740992.0


def set_threads(threads: int) -> None:
    numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))


@njit(cache=True)
def mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _one(state, n, groups, us, vs, cum, total, parent, label):
    for v in range(n):
        parent[v] = v
    comps = n
    m = cum.shape[0]
    while comps > groups:
        state = state + GOLDEN
        r = mix64(state)
        x = np.float64(r >> _S11) * _INV53 * total
        idx = np.searchsorted(cum, x, side="right")
        if idx >= m:
            idx = m - 1
        a = _find(parent, us[idx])
        b = _find(parent, vs[idx])
        if a != b:
            parent[b] = a
            comps -= 1
    # canonical group labels by first appearance
    for v in range(n):
        label[v] = -1
    root_label = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for v in range(n):
        root = _find(parent, v)
        if root_label[root] < 0:
            root_label[root] = nxt
            nxt += 1
        label[v] = root_label[root]


@njit(cache=True, parallel=True)
def contract_batch(seed, start, count, n, groups, us, vs, caps, cum, cutoff, words):
    nsub = (1 << (groups - 1)) - 1
    sides = np.zeros((count, nsub, words), dtype=np.uint64)
    ok = np.zeros((count, nsub), dtype=np.bool_)
    total = cum[cum.shape[0] - 1]
    m = us.shape[0]
    for j in prange(count):
        parent = np.empty(n, dtype=np.int64)
        label = np.empty(n, dtype=np.int64)
        state = mix64(seed ^ mix64(np.uint64(start + j) + GOLDEN))
        _one(state, n, groups, us, vs, cum, total, parent, label)
        cross = np.zeros((groups, groups), dtype=np.float64)
        for e in range(m):
            a = label[us[e]]
            b = label[vs[e]]
            if a != b:
                cross[a, b] += caps[e]
                cross[b, a] += caps[e]
        for t in range(1, nsub + 1):
            mask = t << 1  # group 0 holds vertex 0 and stays outside
            value = 0.0
            for a in range(groups):
                if (mask >> a) & 1:
                    for b in range(groups):
                        if not (mask >> b) & 1:
                            value += cross[a, b]
            if value < cutoff:
                ok[j, t - 1] = True
                for v in range(n):
                    if (mask >> label[v]) & 1:
                        sides[j, t - 1, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return sides, ok
