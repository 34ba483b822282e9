"""Brushing number through its path-cover characterisation.

B(G) is the least k such that some acyclic orientation of G has k directed
paths covering every arc at least once.  For a fixed orientation the inner
minimum is a minimum flow with lower bound 1 on every arc.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded, NoEdges, NotAcyclic, NotFull
from .flow import min_flow_with_lower_bounds
from .graph import Graph, Orientation, is_acyclic

Path = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; truthy iff no clause is violated."""

    clauses: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.clauses

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BrushWitness:
    orientation: Orientation
    paths: tuple[Path, ...]


def min_path_edge_cover(o: Orientation) -> tuple[int, tuple[Path, ...]]:
    """Fewest directed paths of a full acyclic orientation covering all arcs."""
    if not o.is_full:
        raise NotFull(f"edges {o.unoriented()} are unoriented")
    if not is_acyclic(o):
        raise NotAcyclic("orientation has a directed cycle")
    g = o.base
    n, m = g.n, g.m
    src, snk = n, n + 1
    arcs = [(u, v, 1, m) for u, v in o.arcs()]
    arcs += [(src, v, 0, m) for v in range(n)]
    arcs += [(v, snk, 0, m) for v in range(n)]
    solved = min_flow_with_lower_bounds(n + 2, arcs, src, snk)
    assert solved is not None, "unit lower bounds on a DAG are always feasible"
    value, flows = solved
    assert value >= cover_lower_bound(o), "min flow below the degree bound"
    paths = _decompose(n, arcs, flows, src, snk, value)
    return value, paths


def _decompose(n, arcs, flows, src, snk, value) -> tuple[Path, ...]:
    # Peel unit paths, always following the lowest-indexed arc that still
    # carries flow.
    flows = list(flows)
    out: list[list[int]] = [[] for _ in range(n + 2)]
    for i, (u, _, _, _) in enumerate(arcs):
        out[u].append(i)
    paths = []
    for _ in range(value):
        u = src
        walk = []
        while u != snk:
            i = next(a for a in out[u] if flows[a] > 0)
            flows[i] -= 1
            u = arcs[i][1]
            if u != snk:
                walk.append(u)
        assert len(walk) >= 2, "a minimum flow never routes through a lone vertex"
        paths.append(tuple(walk))
    assert not any(flows), "flow not fully decomposed"
    return tuple(paths)


def cover_lower_bound(o: Orientation) -> int:
    """Largest in- or out-degree: a path uses at most one arc in and one out
    of each vertex."""
    g = o.base
    return max((max(o.out_degree(v), o.in_degree(v)) for v in range(g.n)), default=0)


def _acyclic_mask(n: int, edges: tuple[tuple[int, int], ...], mask: int) -> bool:
    # Repeated source removal on bitmask adjacency; cheaper than building an
    # Orientation for each of the 2^m candidates.
    preds = [0] * n
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            preds[u] |= 1 << v
        else:
            preds[v] |= 1 << u
    remaining = (1 << n) - 1
    while remaining:
        sources = 0
        r = remaining
        while r:
            low = r & -r
            v = low.bit_length() - 1
            if preds[v] & remaining == 0:
                sources |= low
            r ^= low
        if not sources:
            return False
        remaining &= ~sources
    return True


def _degree_bound(n: int, edges, mask: int) -> int:
    outd = [0] * n
    ind = [0] * n
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            u, v = v, u
        outd[u] += 1
        ind[v] += 1
    return max(max(outd), max(ind))


def brushing_number(g: Graph, max_seconds: float | None = None) -> tuple[int, BrushWitness]:
    """Exact B(g) by enumerating orientations in binary order of their mask.

    The witness is the first optimal orientation found.  Orientations whose
    degree bound already reaches the incumbent are skipped without a flow
    solve, and the search stops once the incumbent meets the global bound
    ceil(max degree / 2).
    """
    if g.m == 0:
        raise NoEdges("brushing number is only defined here for graphs with edges")
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    floor = max(1, max((g.degree(v) + 1) // 2 for v in range(g.n)))
    best: tuple[int, BrushWitness] | None = None
    for mask in range(1 << g.m):
        if deadline is not None and mask & 63 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded(f"time budget {max_seconds}s exhausted after {mask} orientations")
        if not _acyclic_mask(g.n, g.edges, mask):
            continue
        if best is not None and _degree_bound(g.n, g.edges, mask) >= best[0]:
            continue
        o = Orientation.from_mask(g, mask)
        count, paths = min_path_edge_cover(o)
        if best is None or count < best[0]:
            best = count, BrushWitness(o, paths)
            if count == floor:
                break
    assert best is not None
    return best


def verify_brush_witness(g: Graph, w: BrushWitness) -> Verdict:
    """Check every witness clause against ``g``.

    Clause names: ``wrong_graph``, ``not_full``, ``not_acyclic``,
    ``empty_path``, ``invalid_step``, ``repeated_vertex``,
    ``uncovered_edge``.
    """
    o = w.orientation
    if o.base != g:
        return Verdict(("wrong_graph",))
    problems = []
    if not o.is_full:
        problems.append("not_full")
    if not is_acyclic(o):
        problems.append("not_acyclic")
    covered = [False] * g.m
    for path in w.paths:
        if len(path) < 2:
            problems.append("empty_path")
            continue
        if len(set(path)) != len(path):
            problems.append("repeated_vertex")
        for u, v in zip(path, path[1:]):
            if not (0 <= u < g.n and 0 <= v < g.n) or not o.has_arc(u, v):
                problems.append("invalid_step")
                break
            covered[g.edge_id(u, v)] = True
    if not all(covered):
        problems.append("uncovered_edge")
    return Verdict(tuple(dict.fromkeys(problems)))
