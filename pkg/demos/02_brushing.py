"""
Brushing number as an acyclic path cover
========================================

B(G) is the smallest number of directed paths that cover every arc of some
acyclic orientation of G.  For one orientation the minimum is a min-flow
problem with lower bound 1 on every arc.
"""

from forcebrush import families
from forcebrush.brushing import brushing_number, min_path_edge_cover, verify_brush_witness
from forcebrush.graph import Graph, Orientation

# An out-star needs one path per leaf: every path leaves the centre once.
star = families.star(3)
print("out-star cover:", min_path_edge_cover(Orientation.from_arcs(star, star.edges)))

# Paths may share arcs.  Here two sources feed the arc 2 -> 3, which fans
# out again; two overlapping paths cover all five arcs.
g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
count, paths = min_path_edge_cover(Orientation.from_arcs(g, g.edges))
print("overlapping cover:", count, paths)

# Exact B(G) searches over all acyclic orientations.
for name, h in [("P6", families.path(6)), ("C5", families.cycle(5)),
                ("K_{1,3}", star), ("K4", families.complete(4))]:
    b, w = brushing_number(h)
    assert verify_brush_witness(h, w)
    print(f"B({name}) = {b}:", " | ".join("->".join(map(str, p)) for p in w.paths))
