"""
Zero forcing on small graphs
============================

Color a few vertices; a colored vertex with exactly one uncolored
neighbour colors it.  A set that eventually colors everything is a zero
forcing set, and Z(G) is the size of the smallest one.
"""

from forcebrush import families
from forcebrush.forcing import closure, record_process, zero_forcing_number

# One endpoint of a path colors the whole path.
p5 = families.path(5)
print("closure of {0} in P5:", sorted(closure(p5, {0})))

# In a triangle a single vertex is stuck: it sees two uncolored neighbours.
k3 = families.complete(3)
print("closure of {0} in K3:", sorted(closure(k3, {0})))

# Exact Z by exhaustive search; the witness is the first minimum set in
# (size, lexicographic) order.
for name, g in [("P5", p5), ("C6", families.cycle(6)), ("K4", families.complete(4)),
                ("K_{1,3}", families.star(3)), ("K_{2,3}", families.complete_bipartite(2, 3))]:
    k, s = zero_forcing_number(g)
    print(f"Z({name}) = {k}, witness {set(s)}")

# A recorded process lists every force in the order it happened.
proc = record_process(families.cycle(6), {0, 1})
for forcer, forced in proc.events:
    print(f"  {forcer} forces {forced}")
assert proc.is_valid(families.cycle(6))
