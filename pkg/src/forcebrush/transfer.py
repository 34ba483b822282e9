"""From a zero forcing process on L(G) to certificates for B(G) and Z(G).

The pipeline:

1. forcing chains of a process on L(G) (each chain is a path of G),
2. a partial orientation of the edges lying on chains with at least two
   entries, directed along each chain,
3. a topological order of that partial orientation, used to direct the
   remaining edges of Z,
4. one directed path per chain, covering every edge: |Z| brushing paths,
5. a zero forcing set Y of G with |Y| <= |Z|, plus an explicit process.

Every step asserts what the construction guarantees and raises a
:class:`~forcebrush.errors.ConsistencyError` subclass with a diagnostic
bundle if that ever fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .brushing import BrushWitness, verify_brush_witness
from .errors import (
    AcyclicityViolation,
    ConflictingRules,
    ConsistencyError,
    Disconnected,
    InvalidOrder,
    IsolatedVertex,
    NotForcing,
    NotInducedPath,
    PropertyViolated,
    WitnessInvalid,
)
from .forcing import ForcingProcess, closure, record_process, zero_forcing_number
from .graph import (
    CycleFound,
    Graph,
    Orientation,
    components,
    is_acyclic,
    is_topological_order,
    line_graph,
    shared_vertex,
    topological_order,
)


@dataclass(frozen=True)
class ChainDecomposition:
    """Forcing chains as sequences of edge ids of G.

    Chains with two or more entries come first; ``split`` counts them.
    """

    chains: tuple[tuple[int, ...], ...]
    split: int

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)

    @property
    def k(self) -> int:
        return len(self.chains)


def build_chains(lg: Graph, idx: Sequence[int], proc: ForcingProcess) -> ChainDecomposition:
    """Follow the forces relation from every initial vertex of ``proc``."""
    nxt = proc.forced_by()
    raw = []
    for head in proc.initial:
        chain = [head]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        raw.append(chain)
    flat = [v for c in raw for v in c]
    if sorted(flat) != list(range(lg.n)):
        raise ConsistencyError("forcing chains do not partition V(L(G))", {"chains": raw})
    for c in raw:
        for i in range(len(c)):
            for j in range(i + 1, len(c)):
                if lg.has_edge(c[i], c[j]) != (j == i + 1):
                    raise NotInducedPath(
                        f"chain {c} is not an induced path at positions {i}, {j}",
                        {"chains": raw},
                    )
    ordered = [c for c in raw if len(c) >= 2] + [c for c in raw if len(c) == 1]
    split = sum(1 for c in raw if len(c) >= 2)
    return ChainDecomposition(tuple(tuple(idx[v] for v in c) for c in ordered), split)


def orient_from_chains(g: Graph, cd: ChainDecomposition) -> Orientation:
    """Direct every edge on a chain of length >= 2 along its chain.

    An entry is directed away from the vertex it shares with its
    predecessor, and towards the vertex it shares with its successor.  When
    both rules apply they must agree.
    """
    tails: list[int | None] = [None] * g.m
    for chain in cd.chains[:cd.split]:
        for j, e in enumerate(chain):
            a, b = g.edges[e]
            votes = []
            if j >= 1:
                u = shared_vertex(g, chain[j - 1], e)
                if u is None:
                    raise ConsistencyError(f"chain entries {chain[j - 1]}, {e} are disjoint",
                                           {"chain": list(chain)})
                votes.append(u)
            if j <= len(chain) - 2:
                v = shared_vertex(g, e, chain[j + 1])
                if v is None:
                    raise ConsistencyError(f"chain entries {e}, {chain[j + 1]} are disjoint",
                                           {"chain": list(chain)})
                votes.append(b if v == a else a)
            if len(set(votes)) != 1:
                raise ConflictingRules(
                    f"edge {g.edges[e]} at position {j} gets tails {votes}",
                    {"chain": list(chain), "position": j},
                )
            tails[e] = votes[0]
    return Orientation(g, tails)


def certify_acyclic(h: Orientation) -> list[int]:
    """Topological order of ``h``; a directed cycle raises AcyclicityViolation."""
    order = topological_order(h)
    if isinstance(order, CycleFound):
        raise AcyclicityViolation(
            f"partial orientation has the directed cycle {list(order.cycle)}",
            {"cycle": list(order.cycle), "partial_orientation": h.arcs()},
        )
    return order


def extend_orientation(g: Graph, h: Orientation, order: Sequence[int]) -> Orientation:
    """Direct each unoriented edge from its endpoint that comes first in ``order``."""
    if h.base != g or not is_topological_order(h, order):
        raise InvalidOrder("order is not a topological order of the partial orientation")
    pos = {v: i for i, v in enumerate(order)}
    tails = list(h.tails)
    for i, (u, v) in enumerate(g.edges):
        if tails[i] is None:
            tails[i] = u if pos[u] < pos[v] else v
    full = Orientation(g, tails)
    if not (full.is_full and is_topological_order(full, order)):
        raise ConsistencyError("extension broke the topological order",
                               {"order": list(order), "full_orientation": full.arcs()})
    return full


def chain_path(g: Graph, chain: Sequence[int], gvec: Orientation) -> tuple[int, ...]:
    """The vertex sequence of G traced by the edges of one chain."""
    if len(chain) == 1:
        return gvec.arc(chain[0])
    verts = []
    for e, f in zip(chain, chain[1:]):
        verts.append(shared_vertex(g, e, f))
    a, b = g.edges[chain[0]]
    first = b if verts[0] == a else a
    a, b = g.edges[chain[-1]]
    last = b if verts[-1] == a else a
    return (first, *verts, last)


def derive_brush_witness(g: Graph, cd: ChainDecomposition, gvec: Orientation) -> BrushWitness:
    """One directed path of ``gvec`` per chain; together they cover E(G)."""
    w = BrushWitness(gvec, tuple(chain_path(g, c, gvec) for c in cd.chains))
    verdict = verify_brush_witness(g, w)
    if not verdict or len(w.paths) != cd.k:
        raise WitnessInvalid(
            f"chain paths fail as a brush witness: {list(verdict.clauses)}",
            {"paths": [list(p) for p in w.paths], "clauses": list(verdict.clauses)},
        )
    return w


def structural_violations(gvec: Orientation, z_edges: Iterable[int]) -> list[str]:
    """Per-vertex out-arc conditions of the extended orientation.

    A vertex without in-arcs has all out-arcs in Z; any other vertex has at
    most one out-arc outside Z.
    """
    z = set(z_edges)
    g = gvec.base
    problems = []
    for u in range(g.n):
        outside = [i for i in g.incident_edges(u) if gvec.tails[i] == u and i not in z]
        if gvec.in_degree(u) == 0 and outside:
            problems.append(f"source {u} has out-arcs {outside} outside Z")
        elif gvec.in_degree(u) > 0 and len(outside) > 1:
            problems.append(f"vertex {u} has {len(outside)} out-arcs outside Z")
    return problems


def build_Y(
    g: Graph,
    gvec: Orientation,
    z_edges: Iterable[int],
    order: Sequence[int] | None = None,
) -> tuple[frozenset[int], ForcingProcess]:
    """Zero forcing set Y of G with |Y| <= |Z| and a forcing process for it.

    A source contributes itself and all out-neighbours except the one latest
    in ``order``; every other vertex contributes the heads of its out-arcs
    lying in Z.  Forces then follow ``order``.
    """
    z = set(z_edges)
    if order is None:
        order = topological_order(gvec)
        if isinstance(order, CycleFound):
            raise PropertyViolated("full orientation is cyclic", {"cycle": list(order.cycle)})
    if not (gvec.is_full and is_topological_order(gvec, order)):
        raise PropertyViolated("order is not a topological order of a full orientation",
                               {"order": list(order)})
    problems = structural_violations(gvec, z)
    if problems:
        raise PropertyViolated("; ".join(problems), {"violations": problems})
    pos = {v: i for i, v in enumerate(order)}
    y: set[int] = set()
    for u in range(g.n):
        outs = gvec.out_neighbors(u)
        if gvec.in_degree(u) == 0:
            y.add(u)
            if outs:
                y.update(sorted(outs, key=pos.__getitem__)[:-1])
        else:
            y.update(v for v in outs if g.edge_id(u, v) in z)
    if len(y) > len(z):
        raise PropertyViolated(f"|Y| = {len(y)} exceeds |Z| = {len(z)}", {"y": sorted(y)})

    events = []
    used: set[int] = set()
    for v in order:
        if v in y:
            continue
        forcer = None
        for u in sorted(gvec.in_neighbors(v), key=pos.__getitem__):
            rest = [x for x in gvec.out_neighbors(u) if x not in y]
            if rest == [v] and u not in used:
                forcer = u
                break
        if forcer is None:
            raise NotForcing(f"no in-neighbour of {v} has it as sole out-neighbour outside Y",
                             {"y": sorted(y), "vertex": v})
        used.add(forcer)
        events.append((forcer, v))
    proc = ForcingProcess(tuple(sorted(y)), tuple(events))
    problems = proc.violations(g)
    if problems:
        raise NotForcing("process for Y fails replay", {"y": sorted(y), "violations": problems})
    if len(closure(g, y)) != g.n:
        raise NotForcing("closure of Y is not V(G)", {"y": sorted(y)})
    return frozenset(y), proc


@dataclass(frozen=True)
class TransferResult:
    graph: Graph
    line_graph: Graph
    edge_map: tuple[int, ...]
    process: ForcingProcess
    chains: ChainDecomposition
    partial: Orientation
    full: Orientation
    order: tuple[int, ...]
    brush: BrushWitness
    y: frozenset[int]
    y_process: ForcingProcess
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.process.initial)

    @property
    def z_edges(self) -> tuple[int, ...]:
        return tuple(self.edge_map[v] for v in self.process.initial)


def transfer_from_process(
    g: Graph,
    lg: Graph,
    idx: Sequence[int],
    proc: ForcingProcess,
) -> TransferResult:
    """Run the construction for a given valid process on ``lg = L(g)``.

    The forcing set need not be minimum; the bounds then hold against its
    size.
    """
    bundle: dict = {"n": g.n, "edges": [list(e) for e in g.edges],
                    "z_edges": [idx[v] for v in proc.initial],
                    "process": [list(ev) for ev in proc.events]}
    try:
        problems = proc.violations(lg)
        if problems:
            raise NotForcing("process on L(G) fails replay", {"violations": problems})
        cd = build_chains(lg, idx, proc)
        bundle["chains"] = [list(c) for c in cd.chains]
        h = orient_from_chains(g, cd)
        bundle["partial_orientation"] = [list(a) for a in h.arcs()]
        order = certify_acyclic(h)
        full = extend_orientation(g, h, order)
        brush = derive_brush_witness(g, cd, full)
        z_edges = [idx[v] for v in proc.initial]
        y, y_proc = build_Y(g, full, z_edges, order)
    except ConsistencyError as exc:
        for key, value in bundle.items():
            exc.bundle.setdefault(key, value)
        try:
            from .formats import graph6_str
            exc.bundle.setdefault("graph6", graph6_str(g))
        except Exception:
            pass
        raise
    checks = {
        "chains_induced": True,
        "rules_consistent": True,
        "partial_acyclic": is_acyclic(h),
        "partial_in_full": full.contains(h),
        "full_acyclic": full.is_full and is_acyclic(full),
        "order_topological": is_topological_order(full, order),
        "paths_equal_k": len(brush.paths) == len(proc.initial),
        "brush_witness_valid": verify_brush_witness(g, brush).ok,
        "structural_bullets": not structural_violations(full, z_edges),
        "y_at_most_k": len(y) <= len(proc.initial),
        "y_process_valid": y_proc.is_valid(g),
        "y_closure_full": len(closure(g, y)) == g.n,
    }
    return TransferResult(g, lg, tuple(idx), proc, cd, h, full, tuple(order), brush, y, y_proc, checks)


def transfer(
    g: Graph,
    process_seed: int | None = None,
    max_seconds: float | None = None,
) -> TransferResult:
    """Full pipeline from a minimum zero forcing set of L(g).

    ``process_seed`` switches the force scheduler to a seeded random one.
    """
    if g.n < 2 or g.isolated_vertices():
        raise IsolatedVertex(f"isolated vertices {g.isolated_vertices() or [0]}")
    if len(components(g)) > 1:
        raise Disconnected("transfer needs a connected graph; decompose first")
    lg, idx = line_graph(g)
    _, z = zero_forcing_number(lg, max_seconds=max_seconds)
    rng = None if process_seed is None else random.Random(process_seed)
    proc = record_process(lg, z, rng)
    return transfer_from_process(g, lg, idx, proc)
