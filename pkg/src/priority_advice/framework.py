"""Execution engine for adaptive priority algorithms with an advice tape.

An algorithm supplies three callbacks:

* ``priority(...)`` returns a key function ``item -> comparable``; larger keys
  are served first.  Which history it sees depends on ``algorithm.model``.
* ``advice_request(item, items, decisions)`` says how many advice bits to read
  before deciding on ``item``.
* ``decide(item, items, decisions, advice)`` returns a :class:`Decision`.

Priority keys must be exact (ints, ``Fraction`` or tuples of them).
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Protocol, Sequence


class FrameworkError(Exception):
    pass


class NoItemsError(FrameworkError):
    pass


class TapeExhausted(FrameworkError):
    """Replay-mode read past the end of the fixed advice string."""


class ContractViolation(FrameworkError):
    pass


class Decision(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    LEFT = "left"
    RIGHT = "right"
    SKIP = "skip"

    def __str__(self) -> str:
        return self.value


ACCEPT_REJECT = frozenset({Decision.ACCEPT, Decision.REJECT})
LEFT_RIGHT_SKIP = frozenset({Decision.LEFT, Decision.RIGHT, Decision.SKIP})


class ModelTag(enum.Enum):
    MODEL1 = 1  # items + advice read so far
    MODEL2 = 2  # items + decisions so far
    MODEL3 = 3  # items only


@dataclass(frozen=True)
class InputItem:
    id: Hashable
    payload: Any


# ---------------------------------------------------------------- tie breaks


class TieBreakPolicy:
    """Chooses among items with equal maximal priority."""

    def choose(self, candidates: Sequence[InputItem], step: int) -> InputItem:
        raise NotImplementedError


@dataclass(frozen=True)
class MinId(TieBreakPolicy):
    def choose(self, candidates, step):
        return min(candidates, key=lambda it: it.id)

    def __str__(self):
        return "min-id"


@dataclass(frozen=True)
class MaxId(TieBreakPolicy):
    def choose(self, candidates, step):
        return max(candidates, key=lambda it: it.id)

    def __str__(self):
        return "max-id"


@dataclass(frozen=True)
class SeededRandom(TieBreakPolicy):
    """Uniform choice, reproducible from ``(seed, step, candidate ids)``."""

    seed: int

    def choose(self, candidates, step):
        if len(candidates) == 1:
            return candidates[0]
        ordered = sorted(candidates, key=lambda it: it.id)
        rng = random.Random(f"{self.seed}/{step}/{len(ordered)}")
        return ordered[rng.randrange(len(ordered))]

    def __str__(self):
        return f"random:{self.seed}"


@dataclass(frozen=True)
class Adversarial(TieBreakPolicy):
    callback: Callable[[Sequence[InputItem]], InputItem]

    def choose(self, candidates, step):
        chosen = self.callback(candidates)
        if chosen not in candidates:
            raise ContractViolation("adversarial tie-break returned a non-candidate")
        return chosen

    def __str__(self):
        return "adversarial"


MIN_ID = MinId()
MAX_ID = MaxId()


def parse_tiebreak(text: str) -> TieBreakPolicy:
    """``min-id`` | ``max-id`` | ``random:<seed>``."""
    if text == "min-id":
        return MIN_ID
    if text == "max-id":
        return MAX_ID
    if text.startswith("random:"):
        return SeededRandom(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown tie-break policy {text!r}")


def maximizers(remaining: Sequence[InputItem], priority_key: Callable) -> tuple[Any, list[InputItem]]:
    keys = [priority_key(it) for it in remaining]
    best = max(keys)
    return best, [it for it, k in zip(remaining, keys) if k == best]


def select_next_item(
    remaining: Sequence[InputItem],
    priority_key: Callable[[InputItem], Any],
    tiebreak: TieBreakPolicy = MIN_ID,
    step: int = 0,
) -> InputItem:
    if not remaining:
        raise NoItemsError("no items")
    _, cands = maximizers(remaining, priority_key)
    if len(cands) == 1:
        return cands[0]
    return tiebreak.choose(cands, step)


# ---------------------------------------------------------------- advice tape


class AdviceTape:
    """Advice bits with a monotone read cursor.

    Replay mode (no oracle): reading past the end raises :class:`TapeExhausted`.
    Generation mode: an oracle ``(item, items, decisions, count) -> bits`` is
    consulted whenever the algorithm reads beyond what has been written.
    """

    def __init__(self, bits: Iterable[int] | str = (), oracle: Callable | None = None):
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        self._bits = [int(b) for b in bits]
        if any(b not in (0, 1) for b in self._bits):
            raise ValueError("advice bits must be 0 or 1")
        self.oracle = oracle
        self.cursor = 0

    @property
    def generating(self) -> bool:
        return self.oracle is not None

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self._bits)

    def prefix(self) -> tuple[int, ...]:
        return tuple(self._bits[: self.cursor])

    def __len__(self):
        return len(self._bits)

    def __str__(self):
        return bits_to_str(self._bits)

    def _extend(self, new_bits: Iterable[int]) -> None:
        for b in new_bits:
            if b not in (0, 1):
                raise ContractViolation(f"oracle produced non-bit {b!r}")
            self._bits.append(b)


def read_advice(tape: AdviceTape, count: int, context: tuple | None = None) -> tuple[int, ...]:
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return ()
    missing = tape.cursor + count - len(tape._bits)
    if missing > 0:
        if tape.oracle is None:
            raise TapeExhausted(
                f"tape exhausted: need {count} bit(s) at cursor {tape.cursor}, "
                f"only {len(tape._bits)} written"
            )
        produced = tuple(tape.oracle(*(context or ()), missing))
        if len(produced) != missing:
            raise ContractViolation(f"oracle produced {len(produced)} bits, {missing} requested")
        tape._extend(produced)
    out = tuple(tape._bits[tape.cursor : tape.cursor + count])
    tape.cursor += count
    return out


def bits_to_str(bits: Iterable[int]) -> str:
    return "".join(str(b) for b in bits)


def str_to_bits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if any(c not in "01" for c in text):
        raise ValueError(f"advice string must contain only 0/1, got {text!r}")
    return tuple(int(c) for c in text)


# ---------------------------------------------------------------- trace


@dataclass(frozen=True)
class TraceStep:
    item_id: Hashable
    decision: Decision
    bits: tuple[int, ...] = ()


@dataclass(frozen=True)
class Trace:
    steps: tuple[TraceStep, ...] = ()

    @property
    def total_bits(self) -> int:
        return sum(len(s.bits) for s in self.steps)

    @property
    def advice(self) -> tuple[int, ...]:
        return tuple(b for s in self.steps for b in s.bits)

    @property
    def order(self) -> list:
        return [s.item_id for s in self.steps]

    @property
    def decisions(self) -> dict:
        return {s.item_id: s.decision for s in self.steps}

    def __len__(self):
        return len(self.steps)


# ---------------------------------------------------------------- algorithms


class PriorityAlgorithm(Protocol):
    model: ModelTag
    decision_set: frozenset

    def priority(self, *history) -> Callable[[InputItem], Any]: ...

    def advice_request(self, item: InputItem, items: tuple, decisions: tuple) -> int: ...

    def decide(self, item: InputItem, items: tuple, decisions: tuple, advice: tuple) -> Decision: ...


class PrioritySession:
    """Step-wise driver: the caller chooses what to present, the session
    records the history and enforces the visibility contract.

    Used directly by harnesses (the gadget reduction, the thorny-path
    adversary) that control item presentation themselves.
    """

    def __init__(self, algorithm: PriorityAlgorithm, tape: AdviceTape | None = None,
                 model: ModelTag | None = None):
        self.algorithm = algorithm
        self.tape = tape if tape is not None else AdviceTape()
        self.model = model or algorithm.model
        self.items: list[InputItem] = []
        self.decisions: list[Decision] = []
        self.steps: list[TraceStep] = []

    def priority_key(self) -> Callable[[InputItem], Any]:
        items = tuple(self.items)
        if self.model is ModelTag.MODEL1:
            return self.algorithm.priority(items, self.tape.prefix())
        if self.model is ModelTag.MODEL2:
            return self.algorithm.priority(items, tuple(self.decisions))
        return self.algorithm.priority(items)

    def present(self, item: InputItem) -> Decision:
        alg = self.algorithm
        items, decisions = tuple(self.items), tuple(self.decisions)
        count = alg.advice_request(item, items, decisions)
        bits = read_advice(self.tape, count, (item, items, decisions))
        decision = alg.decide(item, items, decisions, self.tape.prefix())
        if decision not in alg.decision_set:
            raise ContractViolation(f"decision {decision!r} outside {sorted(map(str, alg.decision_set))}")
        self.items.append(item)
        self.decisions.append(decision)
        self.steps.append(TraceStep(item.id, decision, bits))
        return decision

    def trace(self) -> Trace:
        return Trace(tuple(self.steps))


def run_priority_algorithm(
    algorithm: PriorityAlgorithm,
    items: Iterable[InputItem],
    tape: AdviceTape | None = None,
    model: ModelTag | None = None,
    tiebreak: TieBreakPolicy = MIN_ID,
) -> Trace:
    remaining = list(items)
    ids = [it.id for it in remaining]
    if len(set(ids)) != len(ids):
        raise ValueError("item ids must be distinct")
    session = PrioritySession(algorithm, tape, model)
    step = 0
    while remaining:
        item = select_next_item(remaining, session.priority_key(), tiebreak, step)
        remaining.remove(item)
        session.present(item)
        step += 1
    return session.trace()


def certify_trace(
    algorithm: PriorityAlgorithm,
    items: Iterable[InputItem],
    trace: Trace,
    model: ModelTag | None = None,
    tiebreak: TieBreakPolicy | None = None,
) -> list[str]:
    """Replay ``trace`` against fresh priority functions and report problems.

    Checks that every item appears once, that each presented item had maximal
    priority among the unprocessed items (and, if ``tiebreak`` is given, that
    it is the policy's pick), and that the per-step bits are consistent with
    the algorithm's advice requests.  Returns a list of problems, empty if the
    trace is certified.
    """
    by_id = {it.id: it for it in items}
    problems = []
    if sorted(map(repr, by_id)) != sorted(map(repr, trace.order)):
        problems.append("trace does not present every item exactly once")
        return problems
    model = model or algorithm.model
    remaining = list(by_id.values())
    hist_items: list[InputItem] = []
    hist_dec: list[Decision] = []
    advice: list[int] = []
    for step, st in enumerate(trace.steps):
        item = by_id[st.item_id]
        if model is ModelTag.MODEL1:
            key = algorithm.priority(tuple(hist_items), tuple(advice))
        elif model is ModelTag.MODEL2:
            key = algorithm.priority(tuple(hist_items), tuple(hist_dec))
        else:
            key = algorithm.priority(tuple(hist_items))
        best, cands = maximizers(remaining, key)
        if key(item) != best:
            problems.append(f"step {step}: item {st.item_id!r} not of maximal priority")
        elif tiebreak is not None and len(cands) > 1 and tiebreak.choose(cands, step) is not item:
            problems.append(f"step {step}: item {st.item_id!r} not the tie-break choice")
        want = algorithm.advice_request(item, tuple(hist_items), tuple(hist_dec))
        if want != len(st.bits):
            problems.append(f"step {step}: read {len(st.bits)} bit(s), algorithm requests {want}")
        remaining.remove(item)
        hist_items.append(item)
        hist_dec.append(st.decision)
        advice.extend(st.bits)
    return problems
