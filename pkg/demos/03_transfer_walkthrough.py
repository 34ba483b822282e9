"""
From forcing chains in L(G) to both certificates
================================================

Walk through the construction step by step on the "bull" graph, then
check the two resulting bounds against the exact solvers.
"""

from forcebrush.brushing import brushing_number
from forcebrush.forcing import record_process, zero_forcing_number
from forcebrush.graph import Graph, line_graph, to_dot
from forcebrush.transfer import (
    build_chains,
    build_Y,
    certify_acyclic,
    derive_brush_witness,
    extend_orientation,
    orient_from_chains,
)

# Triangle 0-1-2 with pendant vertices 3 (on 0) and 4 (on 1).
g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
lg, idx = line_graph(g)

k, z = zero_forcing_number(lg)
proc = record_process(lg, z)
print(f"Z(L(G)) = {k}, forcing set (edges of G): {[g.edges[idx[v]] for v in z]}")

chains = build_chains(lg, idx, proc)
for chain in chains.chains:
    print("chain:", [g.edges[e] for e in chain])

h = orient_from_chains(g, chains)
print("partial orientation:", h.arcs(), "unoriented:", [g.edges[e] for e in h.unoriented()])

order = certify_acyclic(h)
full = extend_orientation(g, h, order)
print("topological order:", order)
print(to_dot(full))

brush = derive_brush_witness(g, chains, full)
print("brushing paths:", brush.paths)

y, y_proc = build_Y(g, full, [idx[v] for v in z], order)
print("Y =", sorted(y), "forces:", y_proc.events)

print(f"B(G) = {brushing_number(g)[0]} <= {len(brush.paths)} = Z(L(G))")
print(f"Z(G) = {zero_forcing_number(g)[0]} <= |Y| = {len(y)} <= {k} = Z(L(G))")
