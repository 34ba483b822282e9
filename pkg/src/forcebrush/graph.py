"""Immutable simple graphs, orientations, line graphs and topological sorting.

Vertices are the integers ``0..n-1`` and edges carry a dense, stable index
``0..m-1``.  Every other module refers to vertices and edges by index only.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateEdge, EmptyEdgeSet, GraphError, SelfLoop

Edge = tuple[int, int]


class Graph:
    """A simple undirected graph with indexed edges.

    ``edges[i]`` is the pair ``(u, v)`` with ``u < v`` named by edge index
    ``i``.  Edge order is the construction order and never changes.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index", "_incident")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        normalized: list[Edge] = []
        index: dict[Edge, int] = {}
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in index:
                raise DuplicateEdge(f"duplicate edge {e}")
            index[e] = len(normalized)
            normalized.append(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(normalized):
            nbrs[u].append(v)
            nbrs[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._edge_index = index
        self._incident: tuple[tuple[int, ...], ...] = tuple(tuple(i) for i in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``{u, v}``; raises ``KeyError`` when absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def shared_vertex(g: Graph, e: int, f: int) -> int | None:
    """The common endpoint of edges ``e`` and ``f``, or None if disjoint."""
    a, b = g.edges[e]
    c, d = g.edges[f]
    if a == c or a == d:
        return a
    if b == c or b == d:
        return b
    return None


def line_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Build L(g).

    Returns the line graph together with the map from its vertices to edge
    indices of ``g``.  The map is the identity, but callers should use it
    rather than rely on that.
    """
    if g.m == 0:
        raise EmptyEdgeSet("line graph of an edgeless graph is empty")
    pairs: set[Edge] = set()
    for v in range(g.n):
        inc = g.incident_edges(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                a, b = inc[i], inc[j]
                pairs.add((a, b) if a < b else (b, a))
    return Graph(g.m, sorted(pairs)), tuple(range(g.m))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices`` relabelled densely in the given order.

    The second value maps new vertex indices back to ``g``.  Edges keep the
    relative order they had in ``g``.
    """
    back = tuple(vertices)
    fwd = {v: i for i, v in enumerate(back)}
    sub = [(fwd[u], fwd[v]) for u, v in g.edges if u in fwd and v in fwd]
    return Graph(len(back), sub), back


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components, ordered by smallest vertex.

    Each entry is ``(component, back_map)`` with ``back_map[i]`` the vertex
    of ``g`` that vertex ``i`` of the component stands for.
    """
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        members = []
        while stack:
            u = stack.pop()
            members.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(induced_subgraph(g, sorted(members)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def strip_isolated(g: Graph) -> tuple[Graph, tuple[int, ...], int]:
    """Drop isolated vertices; returns ``(graph, back_map, n_dropped)``."""
    keep = [v for v in range(g.n) if g.adj[v]]
    sub, back = induced_subgraph(g, keep)
    return sub, back, g.n - len(keep)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)


class Orientation:
    """Directions assigned to some or all edges of a base graph.

    ``tails[i]`` is the tail vertex of edge ``i``, or None if the edge is
    unoriented.
    """

    __slots__ = ("base", "tails")

    def __init__(self, base: Graph, tails: Sequence[int | None] | None = None):
        if tails is None:
            tails = (None,) * base.m
        if len(tails) != base.m:
            raise GraphError(f"expected {base.m} directions, got {len(tails)}")
        for i, t in enumerate(tails):
            if t is not None and t not in base.edges[i]:
                raise GraphError(f"tail {t} is not an endpoint of edge {base.edges[i]}")
        self.base = base
        self.tails: tuple[int | None, ...] = tuple(tails)

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Sequence[int]]) -> Orientation:
        tails: list[int | None] = [None] * base.m
        for u, v in arcs:
            i = base.edge_id(u, v)
            if tails[i] is not None and tails[i] != u:
                raise GraphError(f"edge {base.edges[i]} oriented both ways")
            tails[i] = u
        return cls(base, tails)

    @classmethod
    def from_mask(cls, base: Graph, mask: int) -> Orientation:
        """Bit ``i`` of ``mask`` set reverses edge ``i`` (``v -> u`` for ``u < v``)."""
        return cls(base, [v if mask >> i & 1 else u for i, (u, v) in enumerate(base.edges)])

    def head(self, i: int) -> int | None:
        t = self.tails[i]
        if t is None:
            return None
        u, v = self.base.edges[i]
        return v if t == u else u

    def arc(self, i: int) -> Edge | None:
        t = self.tails[i]
        return None if t is None else (t, self.head(i))

    def arcs(self) -> list[Edge]:
        """Directed edges in edge-index order."""
        return [a for a in (self.arc(i) for i in range(self.base.m)) if a is not None]

    def has_arc(self, u: int, v: int) -> bool:
        if not self.base.has_edge(u, v):
            return False
        return self.tails[self.base.edge_id(u, v)] == u

    @property
    def is_full(self) -> bool:
        return all(t is not None for t in self.tails)

    def unoriented(self) -> list[int]:
        return [i for i, t in enumerate(self.tails) if t is None]

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(self.head(i) for i in self.base.incident_edges(v) if self.tails[i] == v)

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(self.tails[i] for i in self.base.incident_edges(v)
                      if self.tails[i] is not None and self.tails[i] != v)

    def out_degree(self, v: int) -> int:
        return sum(1 for i in self.base.incident_edges(v) if self.tails[i] == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for i in self.base.incident_edges(v)
                   if self.tails[i] is not None and self.tails[i] != v)

    def contains(self, other: Orientation) -> bool:
        """True if every direction set in ``other`` is set identically here."""
        return other.base == self.base and all(
            t is None or t == s for t, s in zip(other.tails, self.tails))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.base == other.base and self.tails == other.tails

    def __hash__(self) -> int:
        return hash((self.base, self.tails))

    def __repr__(self) -> str:
        return f"Orientation(arcs={self.arcs()}, unoriented={self.unoriented()})"


@dataclass(frozen=True)
class CycleFound:
    """A directed cycle ``cycle[0] -> cycle[1] -> ... -> cycle[0]``."""

    cycle: tuple[int, ...]


def topological_order(o: Orientation) -> list[int] | CycleFound:
    """Kahn's algorithm, always releasing the smallest ready vertex first.

    Unoriented edges impose no constraint.
    """
    g = o.base
    indeg = [0] * g.n
    out: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in o.arcs():
        out[u].append(v)
        indeg[v] += 1
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) == g.n:
        return order
    return CycleFound(_find_cycle(out, [v for v in range(g.n) if indeg[v] > 0]))


def _find_cycle(out: list[list[int]], stuck: list[int]) -> tuple[int, ...]:
    # Every vertex left after Kahn still has an unprocessed in-neighbour, so
    # walking backwards along arcs inside the stuck set must revisit a vertex.
    stuck_set = set(stuck)
    preds: dict[int, list[int]] = {v: [] for v in stuck}
    for u in stuck:
        for w in out[u]:
            if w in stuck_set:
                preds[w].append(u)
    pos: dict[int, int] = {}
    walk = []
    v = stuck[0]
    while v not in pos:
        pos[v] = len(walk)
        walk.append(v)
        v = preds[v][0]
    return tuple(reversed(walk[pos[v]:]))


def is_acyclic(o: Orientation) -> bool:
    return not isinstance(topological_order(o), CycleFound)


def is_topological_order(o: Orientation, order: Sequence[int]) -> bool:
    """Linear check that ``order`` is a permutation respecting every arc."""
    n = o.base.n
    if len(order) != n or sorted(order) != list(range(n)):
        return False
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return all(pos[u] < pos[v] for u, v in o.arcs())


def to_dot(o: Orientation, name: str = "G") -> str:
    """DOT-style report text: arcs as ``u -> v``, unoriented edges as ``u -- v``.

    Mixed output is for reading, not for strict Graphviz parsing.
    """
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(o.base.n))
    for i, (a, b) in enumerate(o.base.edges):
        arc = o.arc(i)
        if arc is None:
            lines.append(f"  {a} -- {b};")
        else:
            lines.append(f"  {arc[0]} -> {arc[1]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
