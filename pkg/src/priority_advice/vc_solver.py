"""Adaptive priority algorithm with advice for vertex cover on max-degree-3 graphs.

Tiers, highest priority first (``current degree`` = unprocessed neighbours):

1. a rejected neighbour                       -> accept
2. current degree 0                           -> reject
3. current degree 1                           -> reject
4. neighbour of an advised-accept vertex that
   already has an accepted neighbour          -> reject
5. current degree 3                           -> accept if it shares >= 2
   neighbours with an advised-accept vertex, otherwise one advice bit
6. current degree 2 (cycle entry)             -> reject

Within tier 5 more shared neighbours come first, then vertices with a
neighbour already seen; within tier 6 a neighbour of the last processed
vertex comes first.  The priority function depends on items and decisions
only, so the algorithm lives in Model 2.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .framework import (
    ACCEPT_REJECT,
    MIN_ID,
    AdviceTape,
    Decision,
    InputItem,
    ModelTag,
    TapeExhausted,
    TieBreakPolicy,
    Trace,
    bits_to_str,
    run_priority_algorithm,
)
from .graphs import Graph
from .oracle import CoverConstraint, oracle_advice_bit

log = logging.getLogger(__name__)

ACCEPT, REJECT = Decision.ACCEPT, Decision.REJECT


@dataclass(frozen=True)
class TierKey:
    tier: int
    shared: int = 0
    seen_neighbor: bool = False
    chain: bool = False

    @property
    def needs_advice(self) -> bool:
        return self.tier == 5 and self.shared < 2

    def priority(self) -> tuple:
        return (7 - self.tier, self.shared, int(self.seen_neighbor), int(self.chain))


@dataclass
class SolverState:
    processed: set = field(default_factory=set)
    accepted: set = field(default_factory=set)
    rejected: set = field(default_factory=set)
    neighbors: dict = field(default_factory=dict)  # processed vertex -> neighbour tuple
    advised_accept: list = field(default_factory=list)
    seen: set = field(default_factory=set)
    last_processed: int | None = None
    order: list = field(default_factory=list)
    t4_fired: int = 0

    def residual_degree(self, item: InputItem) -> int:
        p = self.processed
        return sum(1 for u in item.payload.neighbors if u not in p)

    def apply(self, item: InputItem, decision: Decision) -> None:
        key = tier_of(self, item)
        v = item.payload.vertex
        if key.tier == 4:
            self.t4_fired += 1
            log.debug("tier 4 rejects vertex %s", v)
        self.processed.add(v)
        (self.accepted if decision is ACCEPT else self.rejected).add(v)
        if key.needs_advice and decision is ACCEPT:
            self.advised_accept.append(v)
        self.neighbors[v] = item.payload.neighbors
        self.seen.update(item.payload.neighbors)
        self.last_processed = v
        self.order.append(item.id)


def tier_of(state: SolverState, item: InputItem) -> TierKey:
    nbrs = item.payload.neighbors
    processed = state.processed
    if any(u in state.rejected for u in nbrs):
        return TierKey(1)
    res = sum(1 for u in nbrs if u not in processed)
    if res == 0:
        return TierKey(2)
    if res == 1:
        return TierKey(3)
    v = item.payload.vertex
    acc = state.accepted
    for a in state.advised_accept:
        a_nbrs = state.neighbors[a]
        if v in a_nbrs and any(u in acc for u in a_nbrs):
            return TierKey(4)
    if res == 3:
        shared = 0
        for a in state.advised_accept:
            a_nbrs = state.neighbors[a]
            shared = max(shared, sum(1 for u in nbrs if u in a_nbrs))
        seen = any(u in state.seen for u in nbrs)
        return TierKey(5, shared, seen)
    return TierKey(6, chain=state.last_processed is not None and state.last_processed in nbrs)


def decision_for(key: TierKey, bit: int | None = None) -> Decision:
    if key.tier == 1:
        return ACCEPT
    if key.tier == 5:
        if not key.needs_advice:
            return ACCEPT
        return ACCEPT if bit == 1 else REJECT
    return REJECT


class VertexCoverAlgorithm:
    """The tiered priority algorithm, usable with any advice tape."""

    model = ModelTag.MODEL2
    decision_set = ACCEPT_REJECT

    def __init__(self):
        self._state = SolverState()

    def state(self, items, decisions) -> SolverState:
        st = self._state
        k = len(st.order)
        if k > len(items) or st.order != [it.id for it in items[:k]]:
            st, k = SolverState(), 0
        for it, d in zip(items[k:], decisions[k:]):
            st.apply(it, d)
        self._state = st
        return st

    def priority(self, items, decisions):
        st = self.state(items, decisions)
        return lambda item: tier_of(st, item).priority()

    def advice_request(self, item, items, decisions) -> int:
        return int(tier_of(self.state(items, decisions), item).needs_advice)

    def decide(self, item, items, decisions, advice) -> Decision:
        key = tier_of(self.state(items, decisions), item)
        return decision_for(key, advice[-1] if key.needs_advice else None)


def vc_oracle(g: Graph):
    """Advice generator: the reject-preferring optimality oracle for ``g``."""

    def oracle(item, items, decisions, count):
        acc = {it.payload.vertex for it, d in zip(items, decisions) if d is ACCEPT}
        rej = {it.payload.vertex for it, d in zip(items, decisions) if d is REJECT}
        c = CoverConstraint(frozenset(acc), frozenset(rej))
        return [oracle_advice_bit(g, c, item.payload.vertex)] * count

    return oracle


@dataclass(frozen=True)
class SolveResult:
    cover: frozenset
    advice: tuple
    trace: Trace
    t4_fired: int = 0

    @property
    def size(self) -> int:
        return len(self.cover)

    @property
    def advice_str(self) -> str:
        return bits_to_str(self.advice)


@dataclass(frozen=True)
class ReplayResult:
    valid: bool
    cover: frozenset
    trace: Trace
    reason: str = ""

    @property
    def size(self) -> int:
        return len(self.cover)


def _cover_of(trace: Trace) -> frozenset:
    return frozenset(s.item_id for s in trace.steps if s.decision is ACCEPT)


def solve_with_oracle(g: Graph, tiebreak: TieBreakPolicy = MIN_ID) -> SolveResult:
    alg = VertexCoverAlgorithm()
    tape = AdviceTape(oracle=vc_oracle(g))
    trace = run_priority_algorithm(alg, g.items(), tape, tiebreak=tiebreak)
    return SolveResult(_cover_of(trace), trace.advice, trace, alg._state.t4_fired)


def replay_with_advice(g: Graph, advice, tiebreak: TieBreakPolicy = MIN_ID) -> ReplayResult:
    alg = VertexCoverAlgorithm()
    tape = AdviceTape(advice)
    try:
        trace = run_priority_algorithm(alg, g.items(), tape, tiebreak=tiebreak)
    except TapeExhausted as exc:
        return ReplayResult(False, frozenset(), Trace(), str(exc))
    cover = _cover_of(trace)
    if not g.is_cover(cover):
        return ReplayResult(False, cover, trace, "decisions do not cover every edge")
    return ReplayResult(True, cover, trace)


def advice_budget(n: int) -> int:
    return 15 * n // 46


def check_advice_budget(n: int, bits: int) -> bool:
    if n < 0:
        raise ValueError("n must be non-negative")
    return bits <= advice_budget(n)


# ---------------------------------------------------------------- component audit


@dataclass(frozen=True)
class ComponentRecord:
    vertices: tuple
    advice_vertices: tuple
    edges: int
    types: tuple  # (k0, k1, k2, k3) over non-advice vertices

    @property
    def k(self) -> int:
        return len(self.advice_vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def violations(self) -> list[str]:
        k, size = self.k, self.size
        out = []
        min_size = {1: 4, 2: 7, 3: 10, 4: 13}
        if k in min_size and size < min_size[k]:
            out.append(f"k={k} component has only {size} vertices")
        if k == 4 and self.types[3]:
            out.append(f"k=4 component has {self.types[3]} type-3 vertices")
        if k >= 5 and self.edges < 5 * k - 2:
            out.append(f"k={k} component has {self.edges} < {5 * k - 2} edges")
        if 46 * k > 15 * size:
            out.append(f"k/size = {k}/{size} exceeds 15/46")
        return out


@dataclass(frozen=True)
class ComponentAudit:
    components: tuple

    def violations(self) -> list[str]:
        return [v for c in self.components for v in c.violations()]

    @property
    def total_advice(self) -> int:
        return sum(c.k for c in self.components)


class AuditError(ValueError):
    pass


def audit_components(trace: Trace, g: Graph) -> ComponentAudit:
    """Per-component advice accounting.

    Components are those of the subgraph induced on the seen vertices
    (processed, or neighbour of a processed vertex) at the end of the run.
    """
    if sorted(trace.order) != list(g.vertices):
        raise AuditError("trace does not process every vertex of the graph exactly once")
    processed = set(trace.order)
    seen = processed | {u for v in processed for u in g.adjacency[v]}
    advice_vertices = {s.item_id for s in trace.steps if s.bits}
    sub = Graph.from_edges(g.n, [(u, v) for u, v in g.edges() if u in seen and v in seen])
    records = []
    for comp in sub.components():
        if comp[0] not in seen:
            continue
        members = set(comp)
        adv = tuple(v for v in trace.order if v in advice_vertices and v in members)
        types = [0, 0, 0, 0]
        for v in comp:
            if v not in advice_vertices:
                types[sum(1 for u in g.adjacency[v] if u in advice_vertices)] += 1
        edges = sum(1 for u, v in sub.edges() if u in members)
        records.append(ComponentRecord(tuple(comp), adv, edges, tuple(types)))
    return ComponentAudit(tuple(records))
