from forcebrush.flow import FlowNetwork, min_flow_with_lower_bounds


def test_max_flow_textbook():
    # CLRS figure 26.1: value 23.
    net = FlowNetwork(6)
    for u, v, c in [(0, 1, 16), (0, 2, 13), (1, 3, 12), (2, 1, 4), (2, 4, 14),
                    (3, 2, 9), (3, 5, 20), (4, 3, 7), (4, 5, 4)]:
        net.add_arc(u, v, c)
    assert net.max_flow(0, 5) == 23


def test_max_flow_conserves_and_respects_capacity():
    arcs = [(0, 1, 3), (0, 2, 2), (1, 2, 1), (1, 3, 2), (2, 3, 4)]
    net = FlowNetwork(4)
    ids = [net.add_arc(u, v, c) for u, v, c in arcs]
    value = net.max_flow(0, 3)
    flows = [net.flow_on(k) for k in ids]
    assert value == 5
    assert all(0 <= f <= c for f, (_, _, c) in zip(flows, arcs))
    for v in (1, 2):
        inflow = sum(f for f, (_, b, _) in zip(flows, arcs) if b == v)
        outflow = sum(f for f, (a, _, _) in zip(flows, arcs) if a == v)
        assert inflow == outflow


def test_min_flow_lower_bounds_chain():
    # s -> a -> t with lower bound 2 on a -> t: minimum value 2.
    value, flows = min_flow_with_lower_bounds(3, [(0, 1, 0, 5), (1, 2, 2, 5)], 0, 2)
    assert value == 2 and flows == [2, 2]


def test_min_flow_cancels_unneeded_flow():
    # Two parallel routes, only one has a lower bound.
    arcs = [(0, 1, 1, 9), (1, 3, 0, 9), (0, 2, 0, 9), (2, 3, 0, 9)]
    value, flows = min_flow_with_lower_bounds(4, arcs, 0, 3)
    assert value == 1 and flows == [1, 1, 0, 0]


def test_min_flow_infeasible():
    assert min_flow_with_lower_bounds(2, [(0, 1, 3, 2)], 0, 1) is None
    assert min_flow_with_lower_bounds(3, [(0, 1, 0, 1), (1, 2, 2, 5)], 0, 2) is None
