"""Thorny path: the advice-reading solver and the adversary that fools a
finite family of advice-free priority algorithms with one instance."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

from ..framework import (
    LEFT_RIGHT_SKIP,
    MIN_ID,
    AdviceTape,
    Decision,
    InputItem,
    ModelTag,
    PrioritySession,
    TapeExhausted,
    Trace,
    run_priority_algorithm,
    select_next_item,
)
from ..graphs import ThornyInstance, is_valid_thorny_solution

LEFT, RIGHT, SKIP = Decision.LEFT, Decision.RIGHT, Decision.SKIP


def chosen_edges(trace: Trace) -> list[tuple[int, int]]:
    out = []
    for s in trace.steps:
        u, v, w = s.item_id
        if s.decision is LEFT:
            out.append((u, v))
        elif s.decision is RIGHT:
            out.append((u, w))
    return out


def follow_frontier(start: int, items, decisions) -> int:
    """End of the path grown from ``start`` by the decisions made so far."""
    frontier = start
    for it, d in zip(items, decisions):
        u, v, w = it.payload
        if u == frontier and d is not SKIP:
            frontier = v if d is LEFT else w
    return frontier


# ---------------------------------------------------------------- solver with advice


class AdvisedThornySolver:
    """Serve the triple of the current path end first and let one advice
    bit pick the child (0 = left, 1 = right); skip everything else."""

    model = ModelTag.MODEL2
    decision_set = LEFT_RIGHT_SKIP

    def __init__(self, start: int = 1):
        self.start = start

    def priority(self, items, decisions):
        frontier = follow_frontier(self.start, items, decisions)
        return lambda it: int(it.payload[0] == frontier)

    def advice_request(self, item, items, decisions) -> int:
        return int(item.payload[0] == follow_frontier(self.start, items, decisions))

    def decide(self, item, items, decisions, advice) -> Decision:
        if item.payload[0] != follow_frontier(self.start, items, decisions):
            return SKIP
        return RIGHT if advice[-1] else LEFT


@dataclass(frozen=True)
class ThornyResult:
    valid: bool
    path: tuple  # vertices from the start
    bits_read: int
    trace: Trace
    reason: str = ""


def thorny_solve(inst: ThornyInstance, tape: AdviceTape, tiebreak=MIN_ID) -> ThornyResult:
    alg = AdvisedThornySolver(inst.start)
    try:
        trace = run_priority_algorithm(alg, inst.items(), tape, tiebreak=tiebreak)
    except TapeExhausted as exc:
        return ThornyResult(False, (), tape.cursor, Trace(), str(exc))
    edges = chosen_edges(trace)
    out = dict(edges)
    path = [inst.start]
    while path[-1] in out:
        path.append(out[path[-1]])
    valid = is_valid_thorny_solution(inst, edges)
    return ThornyResult(valid, tuple(path), trace.total_bits, trace, "" if valid else "path misses the last layer")


# ---------------------------------------------------------------- advice-free baselines


class FrontierStrategy:
    """Advice-free path follower: triples of the current path end first
    (``static`` ignores the path and orders triples by id), then a fixed
    left/right rule on the frontier triple; other triples are skipped."""

    model = ModelTag.MODEL2
    decision_set = LEFT_RIGHT_SKIP

    def __init__(self, name: str, choose, static: str | None = None, start: int = 1):
        self.name = name
        self.choose = choose
        self.static = static
        self.start = start

    def priority(self, items, decisions):
        if self.static == "lex":
            return lambda it: tuple(-c for c in it.payload)
        if self.static == "max":
            return lambda it: it.payload
        frontier = follow_frontier(self.start, items, decisions)
        return lambda it: int(it.payload[0] == frontier)

    def advice_request(self, item, items, decisions) -> int:
        return 0

    def decide(self, item, items, decisions, advice) -> Decision:
        if item.payload[0] != follow_frontier(self.start, items, decisions):
            return SKIP
        return self.choose(*item.payload)

    def __repr__(self):
        return f"FrontierStrategy({self.name})"


def _side(cond: bool) -> Decision:
    return LEFT if cond else RIGHT


BASELINES = {
    "smaller-child": lambda: FrontierStrategy("smaller-child", lambda u, v, w: _side(v < w)),
    "larger-child": lambda: FrontierStrategy("larger-child", lambda u, v, w: _side(v > w)),
    "always-left": lambda: FrontierStrategy("always-left", lambda u, v, w: LEFT),
    "always-right": lambda: FrontierStrategy("always-right", lambda u, v, w: RIGHT),
    "lex-order": lambda: FrontierStrategy("lex-order", lambda u, v, w: _side(v < w), static="lex"),
    "max-order": lambda: FrontierStrategy("max-order", lambda u, v, w: _side(v > w), static="max"),
    "even-child": lambda: FrontierStrategy("even-child", lambda u, v, w: _side(v % 2 == 0 or w % 2 == 1)),
    "sum-parity": lambda: FrontierStrategy("sum-parity", lambda u, v, w: _side((u + v + w) % 2 == 0)),
}


def baseline_library(names=None) -> list[FrontierStrategy]:
    names = list(BASELINES) if names in (None, "baseline8") else names
    try:
        return [BASELINES[n]() for n in names]
    except KeyError as exc:
        raise ValueError(f"unknown strategy {exc.args[0]!r}") from None


# ---------------------------------------------------------------- adversary


class PoolExhausted(RuntimeError):
    pass


@dataclass
class FoolingState:
    triples: list  # I_j
    frontier: int  # v_j
    free: list  # F, sorted ascending
    log: list = field(default_factory=list)

    def extension_items(self) -> list[InputItem]:
        """S_j: triples over F, plus triples rooted at the frontier."""
        heads = self.free + [self.frontier]
        out = []
        for a in heads:
            for b, c in permutations(self.free, 2):
                if a != b and a != c:
                    out.append(InputItem((a, b, c), (a, b, c)))
        return out

    def take(self, *labels):
        for x in labels:
            self.free.remove(x)


@dataclass(frozen=True)
class FoolingStep:
    index: int
    case: str  # "already" | "frontier" | "bridge"
    requested: tuple | None
    decision: Decision | None
    added: tuple


@dataclass(frozen=True)
class FoolingResult:
    instance: ThornyInstance
    steps: tuple
    verdicts: tuple  # per algorithm: True when fooled on replay
    labels_used: int
    pool_size: int

    @property
    def fooled(self) -> int:
        return sum(self.verdicts)


def _mistake_in(state: FoolingState, trace_steps) -> bool:
    children = {t[0]: (t[1], t[2]) for t in state.triples}
    alive = set(children) | {state.frontier}
    for item, d in trace_steps:
        u, v, w = item.payload
        if (u, v, w) not in [tuple(t) for t in state.triples]:
            continue
        want = LEFT if v in alive else RIGHT
        if d is not want:
            return True
    return False


def thorny_fool(algorithms, label_pool_size: int | None = None, tiebreak=MIN_ID) -> FoolingResult:
    """Build one thorny instance rooted at 1 on which every algorithm errs.

    Labels come from ``2 .. pool+1``; ``pool`` defaults to 4 per algorithm
    plus 2 for the closing triple that keeps the last thorn off the last layer.
    Each algorithm is run on the current instance plus every candidate
    extension triple, which is not a valid thorny input; its callbacks must
    still return a priority and a decision for any triple.
    """
    ell = len(algorithms)
    pool = label_pool_size if label_pool_size is not None else 4 * ell + 2
    state = FoolingState([], 1, list(range(2, pool + 2)))
    steps = []
    for idx, alg in enumerate(algorithms):
        items = [InputItem(t, t) for t in state.triples]
        inst_ids = {it.id for it in items}
        remaining = items + state.extension_items()
        session = PrioritySession(alg, AdviceTape())
        requested = None
        while remaining:
            item = select_next_item(remaining, session.priority_key(), tiebreak, len(session.items))
            if item.id not in inst_ids:
                requested = item
                break
            remaining.remove(item)
            session.present(item)
        history = list(zip(session.items, session.decisions))
        if requested is None or _mistake_in(state, history):
            steps.append(FoolingStep(idx, "already", None, None, ()))
            continue
        d = session.present(requested)
        x, y, z = requested.payload
        added = []
        if x == state.frontier:
            state.take(y, z)
            case = "frontier"
        else:
            if len(state.free) < 4:
                raise PoolExhausted("label pool exhausted")
            w = max(l for l in state.free if l not in (x, y, z))
            bridge = (state.frontier, x, w)
            state.triples.append(bridge)
            added.append(bridge)
            state.take(x, y, z, w)
            case = "bridge"
        state.triples.append((x, y, z))
        added.append((x, y, z))
        state.frontier = z if d is LEFT or d is SKIP else y
        steps.append(FoolingStep(idx, case, (x, y, z), d, tuple(added)))
    # close: a last triple below the frontier so every thorn sits above the last layer
    if len(state.free) < 2:
        raise PoolExhausted("label pool exhausted")
    a, b = state.free[:2]
    state.take(a, b)
    state.triples.append((state.frontier, a, b))
    triples = tuple(sorted(state.triples))
    inst = ThornyInstance(len(triples), 1, triples)
    verdicts = tuple(not is_valid_thorny_solution(
        inst, chosen_edges(run_priority_algorithm(alg, inst.items(), AdviceTape(), tiebreak=tiebreak)))
        for alg in algorithms)
    labels = {c for t in triples for c in t} - {1}
    return FoolingResult(inst, tuple(steps), verdicts, len(labels), pool)


def advice_lower_bound(N: int) -> float:
    """Advice bits that do not suffice for the N-thorny path problem."""
    return math.log2(N) - 2


def algorithms_fooled_by(bits: int) -> tuple[int, int]:
    """(number of advice-free algorithms a b-bit algorithm amounts to, the
    instance size N = 4 * 2^b that fools them all)."""
    return 2 ** bits, 4 * 2 ** bits
