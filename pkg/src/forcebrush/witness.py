"""JSON witness documents for transfer results, and their independent re-check.

Field order of a document (version ``forcebrush.transfer-witness/1``):

    schema, graph6, n, m, edges, isolated_stripped, k, z_edges, z,
    process, chains, split, partial_orientation, full_orientation,
    topo_order, paths, y, y_process, checks

``edges`` fixes the edge indexing that ``z``, ``process`` and ``chains``
refer to.  Orientations are lists of directed pairs in edge-index order.
"""

from __future__ import annotations

import json
from typing import Any

from .brushing import BrushWitness, Verdict, verify_brush_witness
from .errors import ConsistencyError, ForceBrushError
from .forcing import ForcingProcess, closure, is_zero_forcing, zero_forcing_number
from .formats import graph6_str
from .graph import Graph, Orientation, is_acyclic, is_topological_order, line_graph
from .transfer import ChainDecomposition, TransferResult, build_chains, orient_from_chains

SCHEMA = "forcebrush.transfer-witness/1"

# Minimality is re-checked by exhaustive search only below this size.
MINIMALITY_CHECK_MAX_EDGES = 22


def to_document(result: TransferResult, isolated_stripped: int = 0) -> dict[str, Any]:
    g = result.graph
    return {
        "schema": SCHEMA,
        "graph6": graph6_str(g),
        "n": g.n,
        "m": g.m,
        "edges": [list(e) for e in g.edges],
        "isolated_stripped": isolated_stripped,
        "k": result.k,
        "z_edges": [list(g.edges[e]) for e in result.z_edges],
        "z": list(result.z_edges),
        "process": [[result.edge_map[a], result.edge_map[b]] for a, b in result.process.events],
        "chains": [list(c) for c in result.chains.chains],
        "split": result.chains.split,
        "partial_orientation": [list(a) for a in result.partial.arcs()],
        "full_orientation": [list(a) for a in result.full.arcs()],
        "topo_order": list(result.order),
        "paths": [list(p) for p in result.brush.paths],
        "y": sorted(result.y),
        "y_process": [list(ev) for ev in result.y_process.events],
        "checks": dict(result.checks),
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def verify_document(doc: dict[str, Any], check_minimum: bool = True) -> Verdict:
    """Re-derive and re-check every claim in a witness document.

    Nothing in the document is trusted: the graph is rebuilt from
    ``edges``, the chains and partial orientation are recomputed from the
    recorded process, and both certificates are checked from scratch.
    """
    try:
        return _verify(doc, check_minimum)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        return Verdict((f"malformed: {type(exc).__name__}: {exc}",))


def _verify(doc: dict[str, Any], check_minimum: bool) -> Verdict:
    bad: list[str] = []
    if doc.get("schema") != SCHEMA:
        return Verdict(("schema",))
    g = Graph(doc["n"], doc["edges"])
    if graph6_str(g) != doc["graph6"] or g.m != doc["m"]:
        bad.append("graph_mismatch")
    lg, idx = line_graph(g)
    inv = {e: v for v, e in enumerate(idx)}
    z = [int(e) for e in doc["z"]]
    if [list(g.edges[e]) for e in z] != doc["z_edges"] or len(z) != doc["k"]:
        bad.append("z_mismatch")
    if not is_zero_forcing(lg, [inv[e] for e in z]):
        bad.append("z_not_forcing")
    elif check_minimum and g.m <= MINIMALITY_CHECK_MAX_EDGES:
        if zero_forcing_number(lg)[0] != len(z):
            bad.append("z_not_minimum")

    proc = ForcingProcess(tuple(sorted(inv[e] for e in z)),
                          tuple((inv[a], inv[b]) for a, b in doc["process"]))
    if not proc.is_valid(lg):
        bad.append("process_invalid")
        return Verdict(tuple(bad))
    try:
        cd = build_chains(lg, idx, proc)
        h = orient_from_chains(g, cd)
    except ConsistencyError as exc:
        return Verdict(tuple(bad + [exc.clause]))
    recorded = ChainDecomposition(tuple(tuple(c) for c in doc["chains"]), doc["split"])
    if recorded != cd:
        bad.append("chains_mismatch")
    if Orientation.from_arcs(g, doc["partial_orientation"]) != h:
        bad.append("partial_mismatch")

    full = Orientation.from_arcs(g, doc["full_orientation"])
    if not full.is_full:
        bad.append("not_full")
    elif not is_acyclic(full):
        bad.append("not_acyclic")
    if not full.contains(h):
        bad.append("partial_not_in_full")
    if not is_topological_order(full, doc["topo_order"]):
        bad.append("order_invalid")

    brush = BrushWitness(full, tuple(tuple(p) for p in doc["paths"]))
    bad.extend(verify_brush_witness(g, brush).clauses)
    if len(brush.paths) != len(z):
        bad.append("paths_not_k")

    y = [int(v) for v in doc["y"]]
    if len(set(y)) > len(z):
        bad.append("y_too_large")
    y_proc = ForcingProcess(tuple(sorted(set(y))), tuple(tuple(ev) for ev in doc["y_process"]))
    if not y_proc.is_valid(g):
        bad.append("y_process_invalid")
    if len(closure(g, y)) != g.n:
        bad.append("y_not_forcing")
    if not all(doc["checks"].values()):
        bad.append("recorded_check_failed")
    return Verdict(tuple(dict.fromkeys(bad)))


def load(path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ForceBrushError("witness document must be a JSON object")
    return doc
