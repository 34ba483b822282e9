import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcebrush import families
from forcebrush.brushing import (
    BrushWitness,
    brushing_number,
    cover_lower_bound,
    min_path_edge_cover,
    verify_brush_witness,
)
from forcebrush.errors import NoEdges, NotAcyclic, NotFull
from forcebrush.graph import Graph, Orientation, disjoint_union, is_acyclic
from oracles import acyclic_orientations, brute_min_cover, naive_brushing_number
from test_graph import graphs


def _all_arcs(g):
    return Orientation.from_arcs(g, g.edges)


def test_min_cover_examples():
    assert min_path_edge_cover(_all_arcs(families.path(2))) == (1, ((0, 1),))
    assert min_path_edge_cover(_all_arcs(families.path(4))) == (1, ((0, 1, 2, 3),))
    count, paths = min_path_edge_cover(_all_arcs(families.star(3)))
    assert count == 3 == brute_min_cover(4, list(families.star(3).edges))
    assert sorted(paths) == [(0, 1), (0, 2), (0, 3)]


def test_min_cover_preconditions():
    g = families.cycle(3)
    with pytest.raises(NotFull):
        min_path_edge_cover(Orientation(g))
    with pytest.raises(NotAcyclic):
        min_path_edge_cover(Orientation.from_arcs(g, [(0, 1), (1, 2), (2, 0)]))


def test_overlapping_paths_beat_the_imbalance_sum():
    # Two sources feed one arc that fans out to two sinks.  Paths may share
    # the middle arcs, so two paths suffice although the sum of positive
    # out-minus-in imbalances is 3.
    g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    o = _all_arcs(g)
    imbalance = sum(max(0, o.out_degree(v) - o.in_degree(v)) for v in range(g.n))
    assert imbalance == 3
    assert min_path_edge_cover(o)[0] == 2 == brute_min_cover(g.n, list(g.edges))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7), st.integers(0, 2**20))
def test_min_cover_matches_brute_force(g, mask):
    if not 1 <= g.m <= 8:
        return
    o = Orientation.from_mask(g, mask & ((1 << g.m) - 1))
    if not is_acyclic(o):
        return
    count, paths = min_path_edge_cover(o)
    assert count == brute_min_cover(g.n, o.arcs())
    assert count >= cover_lower_bound(o)
    assert verify_brush_witness(g, BrushWitness(o, paths))


# Frozen from oracles.naive_brushing_number.
@pytest.mark.parametrize("g, b", [
    (families.path(2), 1),
    (families.path(6), 1),
    (families.cycle(4), 2),
    (families.star(3), 2),
    (families.complete(4), 4),
])
def test_brushing_number_examples(g, b):
    value, w = brushing_number(g)
    assert value == b == naive_brushing_number(g)
    assert verify_brush_witness(g, w)
    assert len(w.paths) == b


def test_brushing_number_needs_edges():
    with pytest.raises(NoEdges):
        brushing_number(Graph(3))


def test_brushing_matches_double_brute_force(all_small):
    for g in all_small:
        if 1 <= g.m <= 6:
            assert brushing_number(g)[0] == naive_brushing_number(g), g


def test_additivity():
    a, b = families.cycle(4), families.star(3)
    assert brushing_number(disjoint_union(a, b))[0] == brushing_number(a)[0] + brushing_number(b)[0]


def test_brushing_witness_is_first_optimal_orientation():
    value, w = brushing_number(families.cycle(4))
    for arcs in acyclic_orientations(families.cycle(4)):
        o = Orientation.from_arcs(families.cycle(4), arcs)
        if min_path_edge_cover(o)[0] == value:
            first = o
            break
    # acyclic_orientations enumerates the same binary order as the solver
    assert w.orientation == first


def test_verify_reports_clauses():
    g = families.cycle(4)
    value, w = brushing_number(g)
    assert verify_brush_witness(g, w).ok
    dropped = BrushWitness(w.orientation, w.paths[:-1])
    assert "uncovered_edge" in verify_brush_witness(g, dropped).clauses
    bad_step = BrushWitness(w.orientation, w.paths + ((0, 2),))
    assert "invalid_step" in verify_brush_witness(g, bad_step).clauses
    reversed_path = BrushWitness(w.orientation, tuple(p[::-1] for p in w.paths))
    assert "invalid_step" in verify_brush_witness(g, reversed_path).clauses
    lone = BrushWitness(w.orientation, w.paths + ((1,),))
    assert "empty_path" in verify_brush_witness(g, lone).clauses
    partial = BrushWitness(Orientation(g), ())
    assert set(verify_brush_witness(g, partial).clauses) >= {"not_full", "uncovered_edge"}
    assert verify_brush_witness(families.path(3), w).clauses == ("wrong_graph",)
