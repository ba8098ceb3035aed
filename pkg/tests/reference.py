"""Test-only reference computations, written independently of the package."""
from __future__ import annotations

import functools
from itertools import combinations

import numpy as np


def mvc_size_via_mis(n: int, edges) -> int:
    """n minus a maximum independent set, by plain include/exclude recursion."""
    nb = [0] * n
    for u, v in edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u

    @functools.lru_cache(maxsize=None)
    def mis(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        if not nb[v] & mask:
            return 1 + mis(rest)
        return max(mis(rest), 1 + mis(rest & ~nb[v]))

    return n - mis((1 << n) - 1)


def count_max3_graphs(n: int) -> int:
    """Labeled graphs on n vertices with every degree <= 3, by scanning all
    edge subsets with numpy."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    total = 0
    chunk = 1 << 18
    for lo in range(0, 1 << m, chunk):
        subsets = np.arange(lo, min(lo + chunk, 1 << m), dtype=np.int64)
        deg = np.zeros((len(subsets), n), dtype=np.int8)
        for i, (u, v) in enumerate(pairs):
            bit = ((subsets >> i) & 1).astype(np.int8)
            deg[:, u] += bit
            deg[:, v] += bit
        total += int((deg.max(axis=1, initial=0) <= 3).sum())
    return total


def all_covers(n: int, edges) -> list[frozenset]:
    out = []
    for mask in range(1 << n):
        if all((mask >> u) & 1 or (mask >> v) & 1 for u, v in edges):
            out.append(frozenset(i for i in range(n) if (mask >> i) & 1))
    return out
