"""Integer max-flow (Dinic) and minimum flow with lower bounds.

Arcs are scanned in insertion order everywhere, so results are fully
deterministic.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Residual network with paired forward/backward arcs.

    Arc ``2k`` is the k-th added arc and ``2k + 1`` its reverse.
    """

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add ``u -> v`` with capacity ``cap``; returns its arc id."""
        k = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.out[u].append(k)
        self.out[v].append(k + 1)
        return k

    def flow_on(self, arc: int) -> int:
        """Flow currently carried by forward arc ``arc``."""
        return self.cap[arc ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                v = self.head[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        arcs = self.out[u]
        while it[u] < len(arcs):
            a = arcs[it[u]]
            v = self.head[a]
            if self.cap[a] > 0 and level[v] == level[u] + 1:
                pushed = self._push(v, t, min(limit, self.cap[a]), level, it)
                if pushed:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._push(s, t, 1 << 62, level, it)
                if not pushed:
                    break
                total += pushed


def min_flow_with_lower_bounds(
    n: int,
    arcs: list[tuple[int, int, int, int]],
    s: int,
    t: int,
) -> tuple[int, list[int]] | None:
    """Minimum-value feasible ``s``-``t`` flow.

    ``arcs`` holds ``(u, v, lower, upper)``.  Returns ``(value, flows)`` with
    ``flows[i]`` the flow on ``arcs[i]``, or None when no feasible flow
    exists.  Standard reduction: shift lower bounds into node imbalances, add
    a ``t -> s`` return arc, saturate from a super source to a super sink,
    then push as much as possible back from ``t`` to ``s``.
    """
    ss, tt = n, n + 1
    net = FlowNetwork(n + 2)
    ids = []
    excess = [0] * n
    bound = 0
    for u, v, lo, hi in arcs:
        if lo > hi:
            return None
        ids.append(net.add_arc(u, v, hi - lo))
        excess[v] += lo
        excess[u] -= lo
        bound += hi
    back = net.add_arc(t, s, bound)
    need = 0
    for v in range(n):
        if excess[v] > 0:
            net.add_arc(ss, v, excess[v])
            need += excess[v]
        elif excess[v] < 0:
            net.add_arc(v, tt, -excess[v])
    if net.max_flow(ss, tt) != need:
        return None
    value = net.flow_on(back)
    # Drop the return arc, then cancel as much s -> t flow as possible.
    net.cap[back] = net.cap[back ^ 1] = 0
    value -= net.max_flow(t, s)
    flows = [lo + net.flow_on(k) for k, (_, _, lo, _) in zip(ids, arcs)]
    return value, flows
