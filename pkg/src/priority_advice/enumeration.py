"""Exact offline MVC by enumerating the advice tree of the priority algorithm.

Every advice string of length ``l`` is a candidate run; the best valid run is
optimal because the oracle's string is among them.  The tree is walked depth
first, each node by a fresh replay of its prefix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .framework import MIN_ID, AdviceTape, Decision, TieBreakPolicy, run_priority_algorithm
from .graphs import Graph
from .vc_solver import VertexCoverAlgorithm


class _BranchPoint(Exception):
    def __init__(self, accepted: int):
        self.accepted = accepted


def _signal_branch(item, items, decisions, count):
    raise _BranchPoint(sum(1 for d in decisions if d is Decision.ACCEPT))


@dataclass(frozen=True)
class Leaf:
    advice: tuple
    cover: frozenset
    valid: bool


@dataclass(frozen=True)
class EnumerationReport:
    best_cover: frozenset
    best_size: int
    leaves_explored: int
    max_depth: int
    best_advice: tuple = ()
    leaves: tuple = ()  # only filled when collect_leaves=True


def exact_mvc_by_enumeration(
    g: Graph,
    tiebreak: TieBreakPolicy = MIN_ID,
    prune: bool = True,
    collect_leaves: bool = False,
) -> EnumerationReport:
    best_size = g.n + 1
    best_cover, best_advice = frozenset(), ()
    leaves_explored = max_depth = 0
    leaves = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        max_depth = max(max_depth, len(prefix))
        tape = AdviceTape(prefix, oracle=_signal_branch)
        try:
            trace = run_priority_algorithm(VertexCoverAlgorithm(), g.items(), tape, tiebreak=tiebreak)
        except _BranchPoint as bp:
            if prune and bp.accepted >= best_size:
                leaves_explored += 1
                continue
            stack.append(prefix + (1,))
            stack.append(prefix + (0,))  # reject branch first
            continue
        leaves_explored += 1
        cover = frozenset(s.item_id for s in trace.steps if s.decision is Decision.ACCEPT)
        valid = g.is_cover(cover)
        if collect_leaves:
            leaves.append(Leaf(prefix, cover, valid))
        if valid and len(cover) < best_size:
            best_size, best_cover, best_advice = len(cover), cover, prefix
    if best_size > g.n:
        raise RuntimeError("no advice string produced a vertex cover")
    return EnumerationReport(best_cover, best_size, leaves_explored, max_depth, best_advice, tuple(leaves))
