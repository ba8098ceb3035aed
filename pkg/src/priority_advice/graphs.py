"""Max-degree-3 graphs, vertex-arrival items, text I/O and instance generators."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .framework import InputItem

MAX_DEGREE = 3


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class VertexItem:
    vertex: int
    neighbors: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.neighbors)


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adjacency):
            if len(nbrs) > MAX_DEGREE:
                raise GraphError(f"vertex {v} has degree {len(nbrs)} > {MAX_DEGREE}")
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"parallel edge at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def items(self) -> list[InputItem]:
        """Vertex-arrival, vertex-adjacency items (id = vertex name)."""
        return [InputItem(v, VertexItem(v, self.adjacency[v])) for v in range(self.n)]

    def is_cover(self, cover: Iterable[int]) -> bool:
        c = set(cover)
        return all(u in c or v in c for u, v in self.edges())

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a bijection")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps


# ---------------------------------------------------------------- text I/O


def parse_graph(text: str) -> Graph:
    """Edge-list format: ``n m`` header then ``m`` lines ``u v`` (u < v)."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    deg: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(lineno, f"malformed line {line!r}") from None
        if len(nums) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative header value")
            header = (n, m, lineno)
            deg = [0] * n
            continue
        u, v = nums
        n = header[0]
        if u == v:
            raise ParseError(lineno, f"self-loop {u}")
        if not (0 <= u < v < n):
            raise ParseError(lineno, f"edge {u} {v} violates 0 <= u < v < n")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))
        deg[u] += 1
        deg[v] += 1
        for x in (u, v):
            if deg[x] > MAX_DEGREE:
                raise ParseError(lineno, f"vertex {x} exceeds degree {MAX_DEGREE}")
        edges.append((u, v))
    if header is None:
        raise ParseError(0, "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(header[2], f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


# ---------------------------------------------------------------- small named graphs

# Role labels 1..7 as drawn; stored 0-based (role r is vertex r - 1).
GADGET_EDGES = {
    "one": [(4, 3), (4, 5), (3, 7), (7, 5), (3, 2), (2, 1), (5, 6), (6, 1)],
    "two": [(4, 1), (2, 1), (3, 1), (4, 7), (3, 7), (3, 6), (2, 6), (2, 5), (5, 4)],
}


def gen_gadget_graph(which: str, relabeling: Sequence[int] | None = None) -> Graph:
    """Gadget graph ``one`` or ``two`` on vertices 0..6 (role r is vertex r-1),
    then relabeled so that role-vertex ``r`` becomes ``relabeling[r-1]``."""
    if which not in GADGET_EDGES:
        raise GraphError(f"unknown gadget graph {which!r}")
    g = Graph.from_edges(7, [(u - 1, v - 1) for u, v in GADGET_EDGES[which]])
    if relabeling is None:
        return g
    if sorted(relabeling) != list(range(7)):
        raise GraphError("relabeling must be a bijection on 7 names")
    return g.relabel(relabeling)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


# ---------------------------------------------------------------- random graphs


def gen_random_max3(n: int, target_density: float = 0.8, seed: int = 0) -> Graph:
    """Random simple graph with all degrees <= 3.

    ``target_density`` is the fraction of the cubic edge budget ``floor(3n/2)``
    to aim for; edges are added between random unsaturated, non-adjacent
    vertex pairs until the target is met or no pair remains.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    rng = random.Random(seed)
    target = round(max(0.0, min(1.0, target_density)) * (3 * n // 2))
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    while m < target:
        open_ = [v for v in range(n) if len(adj[v]) < MAX_DEGREE]
        if len(open_) < 2:
            break
        for _ in range(20):
            u, v = rng.sample(open_, 2)
            if v not in adj[u]:
                break
        else:
            pairs = [(u, v) for i, u in enumerate(open_) for v in open_[i + 1:] if v not in adj[u]]
            if not pairs:
                break
            u, v = rng.choice(pairs)
        adj[u].add(v)
        adj[v].add(u)
        m += 1
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def gen_near_cubic(n: int, seed: int = 0) -> Graph:
    """Random graph with every degree 3 except for at most a few deficient vertices."""
    return gen_random_max3(n, 1.0, seed)


def all_max3_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices with max degree <= 3."""
    pairs = list(itertools.combinations(range(n), 2))
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(i):
        if i == len(pairs):
            yield list(chosen)
            return
        yield from rec(i + 1)
        u, v = pairs[i]
        if deg[u] < MAX_DEGREE and deg[v] < MAX_DEGREE:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    for edges in rec(0):
        yield Graph.from_edges(n, edges)


# ---------------------------------------------------------------- online lower-bound family


@dataclass(frozen=True)
class OnlineLBParams:
    n_prime: int
    R: frozenset[int] = frozenset()
    seed: int = 0

    @property
    def n(self) -> int:
        return 6 * self.n_prime + 1

    @property
    def r(self) -> int:
        return len(self.R)

    @property
    def S(self) -> range:
        return range(2 * self.n_prime)


@dataclass(frozen=True)
class OnlineLBInstance:
    graph: Graph
    params: OnlineLBParams
    v: int | None
    w: int
    in_cycle: tuple[int, ...]
    in_paths: tuple[int, ...]

    @property
    def expected_opt(self) -> int:
        return len(self.in_paths) + 3 * len(self.in_cycle) // 2


def _center_neighbors(n_prime: int, seed: int) -> list[tuple[int, int]]:
    pool = list(range(2 * n_prime, 6 * n_prime))
    random.Random(seed).shuffle(pool)
    return [tuple(sorted(pool[2 * i:2 * i + 2])) for i in range(2 * n_prime)]


def gen_online_lb(params: OnlineLBParams) -> OnlineLBInstance:
    """Adversary family for online vertex cover on max-degree-3 graphs.

    Vertices ``0 .. 2n'-1`` form S, each with two fresh neighbours whose
    names depend only on ``(n', seed)`` so S's items are identical for every
    choice of R.  Members of R sit at odd distance from ``v`` on the cycle,
    the ``r`` smallest remaining S vertices at even distance, the rest are
    centres of isolated paths of length two.  Label ``6n'`` is ``w``.
    """
    np_ = params.n_prime
    if np_ < 1:
        raise GraphError("n_prime must be >= 1")
    S = set(params.S)
    R = sorted(params.R)
    if not set(R) <= S:
        raise GraphError("R must be a subset of S")
    r = len(R)
    if r > np_:
        raise GraphError(f"r = {r} exceeds n_prime = {np_}")
    nbrs = _center_neighbors(np_, params.seed)
    even = sorted(S - set(R))[:r]
    in_paths = sorted(S - set(R) - set(even))
    w = 6 * np_
    edges = []
    for c in in_paths:
        a, b = nbrs[c]
        edges += [(a, c), (c, b)]
    # cycle blocks alternate R (odd distance) and even-distance centres
    order = [c for pair in zip(R, even) for c in pair]
    v = None
    if order:
        blocks = [(nbrs[c][0], c, nbrs[c][1]) for c in order]
        for i, (a, c, b) in enumerate(blocks):
            edges += [(a, c), (c, b), (b, blocks[(i + 1) % len(blocks)][0])]
        v = blocks[0][0]
        edges.append((v, w))
    g = Graph.from_edges(params.n, edges)
    return OnlineLBInstance(g, params, v, w, tuple(order), tuple(in_paths))


# ---------------------------------------------------------------- thorny paths


@dataclass(frozen=True)
class ThornyInstance:
    k: int
    start: int
    triples: tuple[tuple[int, int, int], ...]
    spine: tuple[int, ...] = ()
    spine_bits: tuple[int, ...] = ()

    def items(self) -> list[InputItem]:
        return [InputItem(t, t) for t in self.triples]

    def children(self) -> dict[int, tuple[int, int]]:
        return {u: (v, w) for u, v, w in self.triples}

    def component(self) -> set[int]:
        """Vertices reachable from ``start`` along triples."""
        ch = self.children()
        seen, stack = {self.start}, [self.start]
        while stack:
            u = stack.pop()
            for c in ch.get(u, ()):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    def layers(self) -> list[list[int]]:
        ch = self.children()
        layers = [[self.start]]
        while True:
            nxt = [c for u in layers[-1] for c in ch.get(u, ())]
            if not nxt:
                return layers
            layers.append(nxt)

    def last_layer(self) -> set[int]:
        return set(self.layers()[-1])

    def component_triples(self) -> list[tuple[int, int, int]]:
        comp = self.component()
        return [t for t in self.triples if t[0] in comp]

    def depth(self) -> int:
        return len(self.layers()) - 1

    def continuation(self) -> dict[int, int | None]:
        """For each triple's parent on the component: the child that has its
        own triple (``None`` for the final triple, where either leaf works)."""
        ch = self.children()
        out = {}
        for u, v, w in self.component_triples():
            out[u] = v if v in ch else w if w in ch else None
        return out


def is_valid_thorny_solution(inst: ThornyInstance, chosen_edges: Iterable[tuple[int, int]]) -> bool:
    """Chosen edges must be exactly a path from ``start`` to a last-layer leaf."""
    edges = set(chosen_edges)
    out = {}
    for u, c in edges:
        if u in out:
            return False
        out[u] = c
    path_len, u = 0, inst.start
    visited = {u}
    while u in out:
        u = out[u]
        if u in visited:
            return False
        visited.add(u)
        path_len += 1
    return path_len == len(edges) and path_len == inst.depth() and u in inst.last_layer()


def gen_thorny(k: int, seed: int = 0, distractors: int = 0) -> ThornyInstance:
    """Random thorny path of ``k`` spine triples rooted at vertex 1.

    Labels are positive integers drawn injectively from a seeded pool.
    ``distractors`` adds that many further thorny components, each with a
    random number of triples.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    rng = random.Random(seed)
    sizes = [k] + [rng.randint(1, k) for _ in range(distractors)]
    need = sum(2 * s + 1 for s in sizes)
    labels = rng.sample(range(2, 2 + 4 * need), need - 1)
    label_iter = iter(labels)
    triples: list[tuple[int, int, int]] = []
    spine, bits = [1], []
    for comp, size in enumerate(sizes):
        u = 1 if comp == 0 else next(label_iter)
        for i in range(size):
            a, b = next(label_iter), next(label_iter)
            triples.append((u, a, b))
            bit = rng.randint(0, 1) if i < size - 1 else 0
            u = b if bit else a
            if comp == 0:
                bits.append(bit)
                spine.append(u)
    rng.shuffle(triples)
    return ThornyInstance(k, 1, tuple(triples), tuple(spine), tuple(bits))


def parse_thorny(text: str) -> ThornyInstance:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(p) for p in line.split()]))
        except ValueError:
            raise ParseError(lineno, f"malformed line {line!r}") from None
    if not rows:
        raise ParseError(0, "missing 'k s' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(lineno, "header must be 'k s'")
    triples = []
    for lineno, nums in rows[1:]:
        if len(nums) != 3:
            raise ParseError(lineno, "expected a triple 'u v w'")
        triples.append(tuple(nums))
    return ThornyInstance(head[0], head[1], tuple(triples))


def format_thorny(inst: ThornyInstance) -> str:
    lines = [f"{inst.k} {inst.start}"] + [f"{u} {v} {w}" for u, v, w in inst.triples]
    return "\n".join(lines) + "\n"
