"""Reduction from binary string guessing to vertex cover via gadget pairs.

The wrapped vertex-cover algorithm is run on an input that is built while it
runs: every still-unchosen gadget pair contributes its whole item universe to
``R``; once the algorithm takes the first item of pair ``j`` its accept/reject
answer is the guess for the next hidden bit, and the variant matching the
revealed bit is queued in ``Q``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..framework import (
    ACCEPT_REJECT,
    MIN_ID,
    AdviceTape,
    ContractViolation,
    Decision,
    InputItem,
    ModelTag,
    PrioritySession,
    TapeExhausted,
    TieBreakPolicy,
    maximizers,
)
from ..oracle import min_cover_size
from .gadgets import instantiate_vc_gadget_pair, pair_universe

ACCEPT, REJECT = Decision.ACCEPT, Decision.REJECT


@dataclass(frozen=True)
class SGKHInstance:
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("hidden string must be binary")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def random(cls, n: int, seed: int = 0) -> "SGKHInstance":
        rng = random.Random(seed)
        return cls(tuple(rng.randint(0, 1) for _ in range(n)))


# ---------------------------------------------------------------- guessers


def guesser_tape(x: SGKHInstance, mistakes=()) -> AdviceTape:
    """Advice for the wrapped algorithm: bit i accepts the i-th first item
    exactly when the hidden bit is 0, flipped at the given positions."""
    wrong = set(mistakes)
    if any(not 0 <= i < x.n for i in wrong):
        raise ValueError("mistake position out of range")
    return AdviceTape([(1 - b) ^ (i in wrong) for i, b in enumerate(x.bits)])


def scripted_mistakes(n: int, w: int, seed: int = 0) -> list[int]:
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    return sorted(random.Random(seed).sample(range(n), w))


def parse_guesser(spec: str, n: int) -> list[int]:
    """Mistake positions for ``perfect`` | ``always-wrong`` | ``wrong:<w>[:<seed>]``
    | ``random:<seed>`` (each guess wrong with probability 1/2)."""
    if spec == "perfect":
        return []
    if spec == "always-wrong":
        return list(range(n))
    kind, _, rest = spec.partition(":")
    if kind == "wrong" and rest:
        w, _, seed = rest.partition(":")
        return scripted_mistakes(n, int(w), int(seed or 0))
    if kind == "random" and rest:
        rng = random.Random(int(rest))
        return [i for i in range(n) if rng.random() < 0.5]
    raise ValueError(f"unknown guesser {spec!r}")


# ---------------------------------------------------------------- wrapped algorithm


@dataclass
class _GadgetState:
    order: list = field(default_factory=list)
    processed: set = field(default_factory=set)
    touched: set = field(default_factory=set)
    rejected: set = field(default_factory=set)
    bits_used: int = 0


class GadgetVertexCoverAlgorithm:
    """A Model-1 vertex-cover algorithm that asks one advice bit per fresh vertex.

    A vertex is fresh when neither it nor any processed vertex names it.
    Non-fresh vertices come first: those with a rejected neighbour are
    accepted, all others are rejected, fewest unprocessed neighbours first.
    Fresh vertices read a bit (1 = accept).  ``first_degree`` optionally
    raises fresh vertices of that degree above other fresh vertices.
    """

    model = ModelTag.MODEL1
    decision_set = ACCEPT_REJECT

    def __init__(self, first_degree: int | None = None):
        self.first_degree = first_degree
        self._state = _GadgetState()

    def _sync(self, items, decisions=None, advice=None) -> _GadgetState:
        """State after ``items``; decisions are taken from ``decisions`` when
        given, else recomputed from the advice prefix (Model 1 view)."""
        st = self._state
        k = len(st.order)
        if k > len(items) or st.order != [it.id for it in items[:k]]:
            st, k = _GadgetState(), 0
        for idx in range(k, len(items)):
            it = items[idx]
            v = it.payload.vertex
            fresh = v not in st.touched
            if decisions is not None:
                d = decisions[idx]
            elif fresh:
                d = ACCEPT if advice[st.bits_used] else REJECT
            else:
                d = self._rule(st, it)
            st.bits_used += fresh
            st.processed.add(v)
            st.touched.add(v)
            st.touched.update(it.payload.neighbors)
            if d is REJECT:
                st.rejected.add(v)
            st.order.append(it.id)
        self._state = st
        return st

    @staticmethod
    def _rule(st: _GadgetState, item) -> Decision:
        return ACCEPT if any(u in st.rejected for u in item.payload.neighbors) else REJECT

    def priority(self, items, advice):
        st = self._sync(items, advice=advice)
        touched, processed, rejected, pref = st.touched, st.processed, st.rejected, self.first_degree

        def key(item):
            p = item.payload
            if p.vertex not in touched:
                return (0, int(len(p.neighbors) == pref))
            if any(u in rejected for u in p.neighbors):
                return (1, 4)
            return (1, 3 - sum(1 for u in p.neighbors if u not in processed))

        return key

    def advice_request(self, item, items, decisions) -> int:
        return int(item.payload.vertex not in self._sync(items, decisions).touched)

    def decide(self, item, items, decisions, advice) -> Decision:
        st = self._sync(items, decisions)
        if item.payload.vertex not in st.touched:
            return ACCEPT if advice[-1] else REJECT
        return self._rule(st, item)


# ---------------------------------------------------------------- engine


@dataclass(frozen=True)
class GadgetLog:
    j: int
    first_item: tuple
    decision: Decision
    guess: int
    x: int
    variant: str
    items: tuple  # ids of the variant's items, first item included

    @property
    def correct(self) -> bool:
        return self.guess == self.x


@dataclass(frozen=True)
class ReductionTrace:
    instance_items: tuple  # ids, in presentation order
    decisions: tuple
    alg_value: int
    opt_value: int
    mistakes: int
    gadgets: tuple
    bits_read: int
    valid_cover: bool
    guesses: tuple

    @property
    def ratio(self) -> float:
        return self.alg_value / self.opt_value if self.opt_value else 1.0

    @property
    def length(self) -> int:
        return len(self.instance_items)


def _pick(cands, tiebreak, step):
    return cands[0] if len(cands) == 1 else tiebreak.choose(cands, step)


def run_sgkh_reduction(
    wrapped_alg,
    x: SGKHInstance,
    tape: AdviceTape | None = None,
    tiebreak: TieBreakPolicy = MIN_ID,
) -> ReductionTrace:
    """Run the guessing reduction; ``tape`` is the wrapped algorithm's advice."""
    session = PrioritySession(wrapped_alg, tape)
    n = x.n
    R = {j: pair_universe(j) for j in range(n)}
    Q: list[InputItem] = []
    logs: list[GadgetLog] = []
    opt = 0
    guesses = []
    step = i = 0

    def present(item):
        d = session.present(item)
        if d not in ACCEPT_REJECT:
            raise ContractViolation(f"wrapped algorithm answered {d}")
        return d

    while i < n:
        key = session.priority_key()
        r_items = [it for pool in R.values() for it in pool]
        r_best, r_cands = maximizers(r_items, key)
        take_r = True
        if Q:
            q_best, q_cands = maximizers(Q, key)
            take_r = q_best < r_best
        if take_r:
            v = _pick(r_cands, tiebreak, step)
            j = (v.payload.vertex - 1) // 7
            d = present(v)
            guess = 0 if d is ACCEPT else 1
            guesses.append(guess)
            xi = x.bits[i]
            spec = instantiate_vc_gadget_pair(j, v)
            variant = "a" if xi == 0 else "r"
            chosen = spec.items(variant)
            Q.extend(it for it in chosen if it.id != v.id)
            del R[j]
            g, _ = spec.graph(variant)
            opt += min_cover_size(g)
            logs.append(GadgetLog(j, v.id, d, guess, xi, variant, tuple(it.id for it in chosen)))
            i += 1
        else:
            q = _pick(q_cands, tiebreak, step)
            Q.remove(q)
            present(q)
        step += 1
    while Q:
        key = session.priority_key()
        _, q_cands = maximizers(Q, key)
        q = _pick(q_cands, tiebreak, step)
        Q.remove(q)
        present(q)
        step += 1

    trace = session.trace()
    accepted = {s.item_id[0] for s in trace.steps if s.decision is ACCEPT}
    valid = all(it.payload.vertex in accepted or all(u in accepted for u in it.payload.neighbors)
                for it in session.items)
    return ReductionTrace(
        instance_items=tuple(trace.order),
        decisions=tuple(s.decision for s in trace.steps),
        alg_value=len(accepted),
        opt_value=opt,
        mistakes=sum(1 for g in logs if not g.correct),
        gadgets=tuple(logs),
        bits_read=trace.total_bits,
        valid_cover=valid,
        guesses=tuple(guesses),
    )


def certify_reduction(trace: ReductionTrace, algorithm, tape: AdviceTape, n: int) -> list[str]:
    """Rebuild R and Q from the gadget log and check that every presented item
    had maximal priority over R and Q for a fresh copy of the algorithm."""
    from .gadgets import make_item

    by_first = {g.first_item: g for g in trace.gadgets}
    R = {j: pair_universe(j) for j in range(n)}
    Q: dict = {}
    session = PrioritySession(algorithm, AdviceTape(tape.bits))
    problems = []
    for step, (item_id, decision) in enumerate(zip(trace.instance_items, trace.decisions)):
        key = session.priority_key()
        pool = [it for p in R.values() for it in p] + list(Q.values())
        best, _ = maximizers(pool, key)
        item = make_item(item_id[0], item_id[1])
        if key(item) != best:
            problems.append(f"step {step}: {item_id} not of maximal priority")
        if item_id in by_first:
            g = by_first[item_id]
            del R[g.j]
            Q.update({iid: make_item(*iid) for iid in g.items if iid != item_id})
        else:
            Q.pop(item_id, None)
        try:
            replayed = session.present(item)
        except TapeExhausted:
            problems.append(f"step {step}: advice runs out on replay")
            break
        if replayed is not decision:
            problems.append(f"step {step}: decision differs on replay")
    return problems
