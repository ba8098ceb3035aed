"""Vertex-cover gadget pairs over a shared seven-name item universe.

Gadget pair ``j`` uses names ``7j+1 .. 7j+7``.  An item is a vertex name
together with a complete neighbour list of two or three other names of the
same pair; its id is ``(name, neighbours)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..framework import InputItem
from ..graphs import GADGET_EDGES, Graph, VertexItem
from .formulas import GadgetParams

VC_PARAMS = GadgetParams(opt_a=3, opt_r=3, bad_a=4, bad_r=4, s=7, kind="min")

# (graph, role) of the first item in the accept and reject variants, by degree
FIRST_ROLES = {
    2: (("one", 1), ("one", 2)),
    3: (("one", 3), ("two", 1)),
}


class GadgetError(ValueError):
    pass


def pair_names(j: int) -> tuple[int, ...]:
    return tuple(range(7 * j + 1, 7 * j + 8))


def make_item(name: int, neighbors) -> InputItem:
    nbrs = tuple(sorted(neighbors))
    return InputItem((name, nbrs), VertexItem(name, nbrs))


def pair_universe(j: int) -> list[InputItem]:
    names = pair_names(j)
    out = []
    for u in names:
        others = [v for v in names if v != u]
        for d in (2, 3):
            out.extend(make_item(u, c) for c in combinations(others, d))
    return out


def role_adjacency(which: str) -> dict[int, tuple[int, ...]]:
    """Neighbours by role label 1..7."""
    adj: dict[int, list[int]] = {r: [] for r in range(1, 8)}
    for a, b in GADGET_EDGES[which]:
        adj[a].append(b)
        adj[b].append(a)
    return {r: tuple(sorted(ns)) for r, ns in adj.items()}


def assign_roles(which: str, role: int, first: VertexItem, names) -> dict[int, int]:
    """Role -> name map placing ``first`` at ``role``.

    The first item's neighbours take the role's neighbours in sorted order;
    the other names take the other roles in sorted order.
    """
    adj = role_adjacency(which)
    if len(adj[role]) != len(first.neighbors):
        raise GadgetError(f"role {role} of graph {which} has degree {len(adj[role])}")
    mapping = {role: first.vertex}
    mapping.update(zip(adj[role], sorted(first.neighbors)))
    rest_roles = [r for r in range(1, 8) if r not in mapping]
    rest_names = sorted(set(names) - set(mapping.values()))
    mapping.update(zip(rest_roles, rest_names))
    return mapping


def variant_items(which: str, mapping: dict[int, int]) -> tuple[InputItem, ...]:
    adj = role_adjacency(which)
    return tuple(make_item(mapping[r], (mapping[u] for u in adj[r])) for r in range(1, 8))


@dataclass(frozen=True)
class GadgetSpec:
    j: int
    first_item: InputItem
    accept_graph: str
    reject_graph: str
    accept_roles: dict
    reject_roles: dict
    accept_items: tuple
    reject_items: tuple
    params: GadgetParams = VC_PARAMS

    @property
    def universe(self) -> list[InputItem]:
        return pair_universe(self.j)

    @property
    def names(self) -> tuple[int, ...]:
        return pair_names(self.j)

    def items(self, variant: str) -> tuple:
        return self.accept_items if variant == "a" else self.reject_items

    def graph(self, variant: str) -> tuple[Graph, dict[int, int]]:
        """The variant as a 0-based graph plus the name -> vertex map."""
        items = self.items(variant)
        index = {name: i for i, name in enumerate(self.names)}
        edges = {tuple(sorted((index[it.payload.vertex], index[u])))
                 for it in items for u in it.payload.neighbors}
        return Graph.from_edges(7, sorted(edges)), index


def instantiate_vc_gadget_pair(j: int, first_item: VertexItem | InputItem) -> GadgetSpec:
    if isinstance(first_item, InputItem):
        first_item = first_item.payload
    names = pair_names(j)
    if first_item.vertex not in names or any(u not in names for u in first_item.neighbors):
        raise GadgetError(f"first item {first_item} does not use the names of pair {j}")
    if first_item.vertex in first_item.neighbors or len(set(first_item.neighbors)) != len(first_item.neighbors):
        raise GadgetError(f"first item {first_item} is not a simple vertex item")
    deg = len(first_item.neighbors)
    if deg not in FIRST_ROLES:
        raise GadgetError(f"no gadget pair starts with a degree-{deg} vertex")
    (ga, ra), (gr, rr) = FIRST_ROLES[deg]
    amap = assign_roles(ga, ra, first_item, names)
    rmap = assign_roles(gr, rr, first_item, names)
    return GadgetSpec(
        j=j,
        first_item=make_item(first_item.vertex, first_item.neighbors),
        accept_graph=ga,
        reject_graph=gr,
        accept_roles=amap,
        reject_roles=rmap,
        accept_items=variant_items(ga, amap),
        reject_items=variant_items(gr, rmap),
    )
