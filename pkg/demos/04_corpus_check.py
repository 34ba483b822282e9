"""
Exhaustive check over all small connected graphs
================================================

Run both inequalities over every connected graph on 2 to 6 vertices and
tabulate how far the bounds are from tight.
"""

from collections import Counter

from forcebrush.corpus import RunSettings, bundled_corpus, run_corpus

graphs = bundled_corpus("connected_n2-6")
report = run_corpus(graphs, RunSettings(random_processes=2), source="connected_n2-6")
print(report["summary"])

gap_b = Counter(r["z_lg"] - r["b_g"] for r in report["rows"] if r["b_g"] is not None)
gap_z = Counter(r["z_lg"] - r["z_g"] for r in report["rows"])
print("Z(L(G)) - B(G):", dict(sorted(gap_b.items())))
print("Z(L(G)) - Z(G):", dict(sorted(gap_z.items())))

tight = [r["graph6"] for r in report["rows"] if r["b_g"] == r["z_lg"]]
print(f"{len(tight)} graphs with B(G) = Z(L(G)), e.g. {tight[:8]}")
