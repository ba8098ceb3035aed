import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import max3_graphs
from priority_advice.graphs import Graph, complete_graph, cycle_graph, empty_graph, gen_gadget_graph, path_graph
from priority_advice.oracle import (
    NO_CONSTRAINT,
    CoverConstraint,
    Infeasible,
    all_min_covers,
    batch_min_cover_sizes,
    brute_force_mvc,
    min_cover_size,
    min_vertex_cover,
    oracle_advice_bit,
)
from reference import mvc_size_via_mis

# Vertex labels in the gadget figures are 1-based; vertex r is index r - 1 here.
G1, G2 = gen_gadget_graph("one"), gen_gadget_graph("two")


def test_triangle():
    assert min_vertex_cover(cycle_graph(3))[0] == 2


def test_graph_one_optimum():
    size, witness = min_vertex_cover(G1)
    assert size == 3 and G1.is_cover(witness)


def test_graph_one_accepting_vertex_two():
    assert min_vertex_cover(G1, CoverConstraint(forced_in={1}))[0] == 4


def test_infeasible_constraint():
    edge = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(Infeasible):
        min_vertex_cover(edge, CoverConstraint(forced_out={0, 1}))
    with pytest.raises(ValueError):
        CoverConstraint(forced_in={0}, forced_out={0})


def test_advice_bit_examples():
    assert oracle_advice_bit(G1, NO_CONSTRAINT, 2) == 1
    assert oracle_advice_bit(G2, NO_CONSTRAINT, 0) == 0
    k4 = complete_graph(4)
    assert [oracle_advice_bit(k4, NO_CONSTRAINT, v) for v in range(4)] == [0, 0, 0, 0]


def test_advice_bit_rejects_decided_vertex():
    with pytest.raises(ValueError):
        oracle_advice_bit(G1, CoverConstraint(forced_in={2}), 2)


def test_edgeless_and_path():
    assert min_vertex_cover(empty_graph(5)) == (0, frozenset())
    assert min_vertex_cover(path_graph(4)) == (2, frozenset({0, 2}))


@given(max3_graphs(0, 14))
def test_matches_exhaustive_search(g):
    size, witness = min_vertex_cover(g)
    assert g.is_cover(witness)
    assert size == len(witness) == brute_force_mvc(g)[0] == mvc_size_via_mis(g.n, g.edges())


@given(max3_graphs(1, 12))
def test_witness_is_lexicographically_least(g):
    assert min_vertex_cover(g)[1] == brute_force_mvc(g)[1]


@given(max3_graphs(1, 12), st.data())
def test_constrained_optimum_and_monotonicity(g, data):
    verts = list(range(g.n))
    ins = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    outs = data.draw(st.sets(st.sampled_from(verts), max_size=3)) - ins
    c = CoverConstraint(ins, outs)
    try:
        expected = brute_force_mvc(g, c)
    except Infeasible:
        with pytest.raises(Infeasible):
            min_vertex_cover(g, c)
        return
    assert min_vertex_cover(g, c) == expected
    assert expected[0] >= min_cover_size(g)


@given(max3_graphs(1, 12), st.data())
def test_bit_one_means_every_optimum_accepts(g, data):
    v = data.draw(st.sampled_from(range(g.n)))
    bit = oracle_advice_bit(g, NO_CONSTRAINT, v)
    optima = all_min_covers(g)
    if bit == 1:
        assert all(v in c for c in optima)
        assert all(sum(u in c for u in g.neighbors(v)) <= 1 for c in optima)
    else:
        assert any(v not in c for c in optima)


def test_batch_sizes_agree():
    graphs = [cycle_graph(5), G1, G2, complete_graph(4), path_graph(3)]
    padded = [(g, g.edges()) for g in graphs]
    for n in (5, 7):
        group = [edges for g, edges in padded if g.n <= n]
        sizes = batch_min_cover_sizes(n, group)
        assert list(sizes) == [mvc_size_via_mis(n, e) for e in group]
    with pytest.raises(ValueError):
        batch_min_cover_sizes(11, [])
