import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from priority_advice.framework import (
    MAX_ID,
    MIN_ID,
    Adversarial,
    AdviceTape,
    ContractViolation,
    Decision,
    InputItem,
    NoItemsError,
    SeededRandom,
    TapeExhausted,
    Trace,
    TraceStep,
    bits_to_str,
    certify_trace,
    parse_tiebreak,
    read_advice,
    run_priority_algorithm,
    select_next_item,
    str_to_bits,
)
from priority_advice.graphs import cycle_graph
from priority_advice.vc_solver import VertexCoverAlgorithm
from toy_algorithms import AdviceAware, DecisionsAware, ItemsOnly, Misbehaving, random_items

ITEMS = [InputItem("a", 5), InputItem("b", 5), InputItem("c", 1)]


def weight(it):
    return it.payload


def test_select_min_id():
    assert select_next_item(ITEMS, weight, MIN_ID).id == "a"


def test_select_adversarial():
    pick_b = Adversarial(lambda cands: next(c for c in cands if c.id == "b"))
    assert select_next_item(ITEMS, weight, pick_b).id == "b"


def test_select_singleton_and_empty():
    assert select_next_item([InputItem("z", 0)], weight).id == "z"
    with pytest.raises(NoItemsError, match="no items"):
        select_next_item([], weight)


def test_adversarial_must_return_candidate():
    rogue = Adversarial(lambda cands: InputItem("q", 9))
    with pytest.raises(ContractViolation):
        select_next_item(ITEMS, weight, rogue)


def test_max_id_and_seeded_random():
    assert select_next_item(ITEMS, weight, MAX_ID).id == "b"
    picks = {select_next_item(ITEMS, weight, SeededRandom(s), step=3).id for s in range(30)}
    assert picks == {"a", "b"}
    assert all(
        select_next_item(ITEMS, weight, SeededRandom(s), 1).id == select_next_item(ITEMS, weight, SeededRandom(s), 1).id
        for s in range(10)
    )


def test_parse_tiebreak():
    assert parse_tiebreak("min-id") is MIN_ID
    assert parse_tiebreak("max-id") is MAX_ID
    assert parse_tiebreak("random:7") == SeededRandom(7)
    with pytest.raises(ValueError):
        parse_tiebreak("sideways")


def test_read_advice_examples():
    tape = AdviceTape("101")
    assert read_advice(tape, 2) == (1, 0)
    assert tape.cursor == 2
    assert read_advice(tape, 0) == ()
    assert tape.cursor == 2
    one = AdviceTape("1")
    read_advice(one, 1)
    with pytest.raises(TapeExhausted):
        read_advice(one, 1)
    with pytest.raises(ValueError):
        read_advice(one, -1)


def test_generation_mode_extends_tape():
    tape = AdviceTape(oracle=lambda missing: [1] * missing)
    assert read_advice(tape, 3, ()) == (1, 1, 1)
    assert tape.bits == (1, 1, 1) and tape.generating


def test_oracle_must_produce_bits():
    tape = AdviceTape(oracle=lambda missing: [2] * missing)
    with pytest.raises(ContractViolation):
        read_advice(tape, 1, ())


def test_bit_strings():
    assert bits_to_str((1, 0, 1)) == "101"
    assert str_to_bits(" 0110\n") == (0, 1, 1, 0)
    with pytest.raises(ValueError):
        str_to_bits("012")
    with pytest.raises(ValueError):
        AdviceTape([0, 3])


def test_triangle_chain_order():
    g = cycle_graph(3)
    tape = AdviceTape()
    trace = run_priority_algorithm(VertexCoverAlgorithm(), g.items(), tape)
    assert [str(s.decision) for s in trace.steps] == ["reject", "accept", "accept"]
    assert trace.total_bits == 0 and tape.cursor == 0


def test_empty_input():
    trace = run_priority_algorithm(ItemsOnly(), [], AdviceTape())
    assert len(trace) == 0 and trace.total_bits == 0


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        run_priority_algorithm(ItemsOnly(), [InputItem(1, (1, 0)), InputItem(1, (2, 0))])


def test_decision_outside_set():
    with pytest.raises(ContractViolation):
        run_priority_algorithm(Misbehaving(), [InputItem(1, (1, 0))])


def test_certify_flags_wrong_order():
    items = [InputItem(i, (i, 0)) for i in range(4)]
    trace = run_priority_algorithm(ItemsOnly(), items)
    assert certify_trace(ItemsOnly(), items, trace, tiebreak=MIN_ID) == []
    swapped = Trace((trace.steps[1], trace.steps[0]) + trace.steps[2:])
    assert certify_trace(ItemsOnly(), items, swapped)
    extra_bit = Trace((TraceStep(trace.steps[0].item_id, trace.steps[0].decision, (1,)),) + trace.steps[1:])
    assert any("bit" in p for p in certify_trace(ItemsOnly(), items, extra_bit))
    assert certify_trace(ItemsOnly(), items, Trace(trace.steps[:-1]))


@given(st.integers(0, 2**32), st.integers(1, 10))
def test_model3_order_ignores_tape(seed, n):
    rng = random.Random(seed)
    items = random_items(rng, n)
    t1 = run_priority_algorithm(ItemsOnly(), items, AdviceTape([0] * 30))
    t2 = run_priority_algorithm(ItemsOnly(), items, AdviceTape([rng.randint(0, 1) for _ in range(30)]))
    assert t1.order == t2.order


@given(st.integers(0, 2**32), st.integers(1, 10))
def test_model2_order_follows_decisions(seed, n):
    rng = random.Random(seed)
    items = random_items(rng, n)
    tape_bits = [rng.randint(0, 1) for _ in range(30)]
    t1 = run_priority_algorithm(DecisionsAware(), items, AdviceTape(tape_bits))
    t2 = run_priority_algorithm(DecisionsAware(), items, AdviceTape(tape_bits))
    assert t1 == t2


@given(st.integers(0, 2**32), st.integers(0, 10), st.sampled_from(["min-id", "max-id", "random:3"]))
def test_cursor_accounting_and_certification(seed, n, tb):
    rng = random.Random(seed)
    items = random_items(rng, n)
    for alg in (ItemsOnly(), DecisionsAware(), AdviceAware()):
        tape = AdviceTape(oracle=lambda *ctx, r=rng: [r.randint(0, 1) for _ in range(ctx[-1])])
        trace = run_priority_algorithm(alg, items, tape, tiebreak=parse_tiebreak(tb))
        assert trace.total_bits == tape.cursor == len(tape)
        assert trace.advice == tape.bits
        assert sorted(trace.order) == sorted(it.id for it in items)
        assert certify_trace(type(alg)(), items, trace, tiebreak=parse_tiebreak(tb)) == []
