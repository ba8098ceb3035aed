"""Exact minimum vertex cover (constrained) and the reject-preferring advice oracle."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graphs import Graph


class Infeasible(Exception):
    """No vertex cover satisfies the constraint."""


@dataclass(frozen=True)
class CoverConstraint:
    forced_in: frozenset[int] = frozenset()
    forced_out: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "forced_in", frozenset(self.forced_in))
        object.__setattr__(self, "forced_out", frozenset(self.forced_out))
        if self.forced_in & self.forced_out:
            raise ValueError("forced_in and forced_out overlap")

    def with_in(self, v: int) -> "CoverConstraint":
        return CoverConstraint(self.forced_in | {v}, self.forced_out)

    def with_out(self, v: int) -> "CoverConstraint":
        return CoverConstraint(self.forced_in, self.forced_out | {v})


NO_CONSTRAINT = CoverConstraint()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CoverSolver:
    """Memoised branch-and-reduce for MVC on induced subgraphs of one graph.

    Reductions: isolated vertices are dropped, a degree-1 vertex forces its
    neighbour.  Components are solved independently; a component whose
    vertices all have degree 2 is a cycle.  Otherwise branch on a
    maximum-degree vertex v: take v, or take N(v).
    """

    def __init__(self, g: Graph):
        self.g = g
        self.nb = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
        self.memo: dict[int, int] = {0: 0}

    @property
    def full(self) -> int:
        return (1 << self.g.n) - 1

    def size(self, mask: int) -> int:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        res = self._size(mask)
        self.memo[mask] = res
        return res

    def _size(self, mask: int) -> int:
        nb = self.nb
        taken = 0
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                if not (mask >> v) & 1:
                    continue
                d = (nb[v] & mask).bit_count()
                if d == 0:
                    mask &= ~(1 << v)
                    changed = True
                elif d == 1:
                    u = (nb[v] & mask).bit_length() - 1
                    mask &= ~((1 << v) | (1 << u))
                    taken += 1
                    changed = True
        if not mask:
            return taken
        comps = self._components(mask)
        if len(comps) > 1:
            return taken + sum(self.size(c) for c in comps)
        best_v, best_d = -1, -1
        for v in _bits(mask):
            d = (nb[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d <= 2:
            # connected, all degrees 2: a cycle
            return taken + (mask.bit_count() + 1) // 2
        v = best_v
        n_v = nb[v] & mask
        take_v = 1 + self.size(mask & ~(1 << v))
        take_n = best_d + self.size(mask & ~(1 << v) & ~n_v)
        return taken + min(take_v, take_n)

    def _components(self, mask: int) -> list[int]:
        nb = self.nb
        comps = []
        rest = mask
        while rest:
            start = rest & -rest
            comp = frontier = start
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= nb[v]
                grow &= mask & ~comp
                comp |= grow
                frontier = grow
            comps.append(comp)
            rest &= ~comp
        return comps

    def witness(self, mask: int) -> list[int]:
        """Lexicographically least minimum cover of the induced subgraph."""
        out = []
        target = self.size(mask)
        for v in range(self.g.n):
            if not (mask >> v) & 1:
                continue
            without_v = mask & ~(1 << v)
            if 1 + self.size(without_v) == target:
                out.append(v)
                mask, target = without_v, target - 1
            else:
                n_v = self.nb[v] & mask
                out.extend(_bits(n_v))
                mask = without_v & ~n_v
                target -= n_v.bit_count()
        return sorted(out)


@functools.lru_cache(maxsize=256)
def solver_for(g: Graph) -> CoverSolver:
    return CoverSolver(g)


def _reduce_constraint(g: Graph, c: CoverConstraint) -> tuple[set[int], int]:
    """Apply a constraint: returns (vertices forced into the cover, residual mask)."""
    for v in c.forced_in | c.forced_out:
        if not 0 <= v < g.n:
            raise ValueError(f"constraint names unknown vertex {v}")
    taken = set(c.forced_in)
    for v in c.forced_out:
        for u in g.adjacency[v]:
            if u in c.forced_out:
                raise Infeasible(f"edge {v}-{u} has both endpoints forced out")
            taken.add(u)
    mask = (1 << g.n) - 1
    for v in taken | c.forced_out:
        mask &= ~(1 << v)
    return taken, mask


def min_cover_size(g: Graph, c: CoverConstraint = NO_CONSTRAINT) -> int:
    taken, mask = _reduce_constraint(g, c)
    return len(taken) + solver_for(g).size(mask)


def min_vertex_cover(g: Graph, c: CoverConstraint = NO_CONSTRAINT) -> tuple[int, frozenset[int]]:
    """Minimum cover containing ``forced_in`` and avoiding ``forced_out``.

    Returns ``(size, witness)`` with the lexicographically least optimum as
    witness; raises :class:`Infeasible` when the constraint admits no cover.
    """
    taken, mask = _reduce_constraint(g, c)
    solver = solver_for(g)
    witness = frozenset(taken) | frozenset(solver.witness(mask))
    return len(witness), witness


def oracle_advice_bit(g: Graph, c: CoverConstraint, v: int) -> int:
    """1 (accept) iff no optimum consistent with ``c`` rejects ``v``; else 0."""
    if v in c.forced_in or v in c.forced_out:
        raise ValueError(f"vertex {v} already decided")
    base = min_cover_size(g, c)
    try:
        rejecting = min_cover_size(g, c.with_out(v))
    except Infeasible:
        return 1
    return 0 if rejecting == base else 1


# ---------------------------------------------------------------- exhaustive reference


BRUTE_FORCE_LIMIT = 24


def _cover_mask_table(g: Graph, c: CoverConstraint | None = None) -> tuple[np.ndarray, np.ndarray]:
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}")
    subsets = np.arange(1 << n, dtype=np.uint32)
    ok = np.ones(1 << n, dtype=bool)
    for u, v in g.edges():
        ok &= ((subsets >> u) | (subsets >> v)) & 1 == 1
    if c is not None:
        for v in c.forced_in:
            ok &= (subsets >> v) & 1 == 1
        for v in c.forced_out:
            ok &= (subsets >> v) & 1 == 0
    return subsets[ok], np.bitwise_count(subsets[ok])


def all_min_covers(g: Graph, c: CoverConstraint | None = None) -> list[frozenset[int]]:
    """Every minimum cover, by enumerating all 2^n vertex subsets."""
    masks, sizes = _cover_mask_table(g, c)
    if masks.size == 0:
        raise Infeasible("no subset satisfies the constraint")
    best = sizes.min()
    return [frozenset(v for v in range(g.n) if (int(m) >> v) & 1) for m in masks[sizes == best]]


def brute_force_mvc(g: Graph, c: CoverConstraint | None = None) -> tuple[int, frozenset[int]]:
    covers = all_min_covers(g, c)
    best = min(covers, key=lambda s: sorted(s))
    return len(best), best


def covers_of_size(g: Graph, k: int, c: CoverConstraint | None = None) -> list[frozenset[int]]:
    masks, sizes = _cover_mask_table(g, c)
    return [frozenset(v for v in range(g.n) if (int(m) >> v) & 1) for m in masks[sizes == k]]


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    return g.is_cover(cover)


def batch_min_cover_sizes(n: int, edge_lists) -> np.ndarray:
    """Minimum cover size of many graphs on the same ``n`` vertices at once.

    Each graph is encoded as a bitmask over the ``C(n, 2)`` vertex pairs and
    compared against the pair sets covered by each of the ``2^n`` subsets.
    """
    if n > 10:
        raise ValueError("batch brute force limited to n <= 10")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    subsets = np.arange(1 << n, dtype=np.uint64)
    covered = np.zeros(1 << n, dtype=np.uint64)
    for i, (u, v) in enumerate(pairs):
        hit = (((subsets >> np.uint64(u)) | (subsets >> np.uint64(v))) & np.uint64(1)).astype(bool)
        covered[hit] |= np.uint64(1 << i)
    masks = np.array([sum(1 << index[tuple(sorted(e))] for e in edges) for edges in edge_lists],
                     dtype=np.uint64)
    sizes = np.bitwise_count(subsets).astype(np.int64)
    order = np.argsort(sizes, kind="stable")
    best = np.full(len(masks), n, dtype=np.int64)
    for lo in range(0, len(masks), 8192):
        chunk = masks[lo:lo + 8192]
        ok = (chunk[:, None] & ~covered[None, order]) == 0
        best[lo:lo + 8192] = sizes[order][ok.argmax(axis=1)]
    return best
