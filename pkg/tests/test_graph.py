import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcebrush import families
from forcebrush.errors import DuplicateEdge, EmptyEdgeSet, GraphError, SelfLoop
from forcebrush.graph import (
    CycleFound,
    Graph,
    Orientation,
    components,
    disjoint_union,
    is_acyclic,
    is_topological_order,
    line_graph,
    strip_isolated,
    to_dot,
    topological_order,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(SelfLoop):
        Graph(2, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_edge_indices_are_stable():
    g = Graph(4, [(2, 3), (1, 0), (0, 3)])
    assert g.edges == ((2, 3), (0, 1), (0, 3))
    assert [g.edge_id(*e) for e in g.edges] == [0, 1, 2]
    assert g.edge_id(3, 0) == 2
    assert g.adj[0] == (1, 3)


def test_line_graph_examples():
    lg, idx = line_graph(families.path(3))
    assert (lg.n, lg.edges) == (2, ((0, 1),))
    assert idx == (0, 1)
    assert line_graph(families.complete(3))[0] == families.complete(3)
    assert line_graph(families.star(3))[0] == families.complete(3)


def test_line_graph_of_edgeless_graph():
    with pytest.raises(EmptyEdgeSet):
        line_graph(Graph(3))


@given(graphs())
def test_line_graph_degree_law(g):
    if g.m == 0:
        return
    lg, idx = line_graph(g)
    assert lg.n == g.m
    for v in range(lg.n):
        a, b = g.edges[idx[v]]
        assert lg.degree(v) == g.degree(a) + g.degree(b) - 2


def test_components_examples():
    g = families.path(4)
    [(comp, back)] = components(g)
    assert comp == g and back == (0, 1, 2, 3)
    parts = components(disjoint_union(families.path(2), families.path(3)))
    assert [c.n for c, _ in parts] == [2, 3]
    assert [c.n for c, _ in components(Graph(3))] == [1, 1, 1]


@given(graphs())
def test_components_partition(g):
    parts = components(g)
    seen = sorted(v for _, back in parts for v in back)
    assert seen == list(range(g.n))
    assert sum(c.m for c, _ in parts) == g.m
    for comp, back in parts:
        for u, v in comp.edges:
            assert g.has_edge(back[u], back[v])


def test_strip_isolated():
    g = Graph(5, [(1, 3)])
    core, back, dropped = strip_isolated(g)
    assert (core.n, core.edges, back, dropped) == (2, ((0, 1),), (1, 3), 3)


def test_topological_order_examples():
    g = families.path(3)
    assert topological_order(Orientation.from_arcs(g, [(0, 1), (1, 2)])) == [0, 1, 2]
    assert topological_order(Orientation.from_arcs(g, [(2, 1), (1, 0)])) == [2, 1, 0]
    tri = families.complete(3)
    found = topological_order(Orientation.from_arcs(tri, [(0, 1), (1, 2), (2, 0)]))
    assert isinstance(found, CycleFound)
    assert sorted(found.cycle) == [0, 1, 2]
    assert topological_order(Orientation(families.cycle(5))) == [0, 1, 2, 3, 4]


def test_topological_tie_break_prefers_small_index():
    g = Graph(4, [(0, 3), (1, 2)])
    o = Orientation.from_arcs(g, [(3, 0), (2, 1)])
    assert topological_order(o) == [2, 1, 3, 0]


def test_cycle_is_reported_as_real_cycle():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)])
    o = Orientation.from_arcs(g, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
    found = topological_order(o)
    assert isinstance(found, CycleFound)
    cyc = found.cycle
    assert all(o.has_arc(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


@settings(max_examples=200)
@given(graphs(), st.integers(0, 2**36))
def test_topological_order_valid_when_acyclic(g, mask):
    o = Orientation.from_mask(g, mask & ((1 << g.m) - 1))
    order = topological_order(o)
    assert is_acyclic(o) == (not isinstance(order, CycleFound))
    if isinstance(order, CycleFound):
        cyc = order.cycle
        assert len(set(cyc)) == len(cyc) >= 3
        assert all(o.has_arc(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    else:
        assert is_topological_order(o, order)


def test_orientation_queries():
    g = families.star(3)
    o = Orientation.from_arcs(g, [(1, 0), (0, 2)])
    assert not o.is_full and o.unoriented() == [2]
    assert o.out_neighbors(0) == [2] and o.in_neighbors(0) == [1]
    assert o.in_degree(0) == 1 and o.out_degree(0) == 1
    full = Orientation.from_arcs(g, [(1, 0), (0, 2), (0, 3)])
    assert full.contains(o) and not o.contains(full)
    with pytest.raises(GraphError):
        Orientation.from_arcs(g, [(1, 0), (0, 1)])


def test_dot_output():
    g = families.path(3)
    text = to_dot(Orientation.from_arcs(g, [(1, 0)]))
    assert "1 -> 0;" in text and "1 -- 2;" in text
