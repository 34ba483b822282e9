"""Regenerate the frozen graph6 corpora shipped in src/forcebrush/data.

Uses the networkx graph atlas (all graphs on up to 7 vertices, one per
isomorphism class) as the external generator.  Run once; the output is
checked in and never regenerated during tests.

    python tools/make_corpus.py
"""

from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parents[1] / "src" / "forcebrush" / "data"


def g6(h):
    return nx.to_graph6_bytes(h, header=False)


def main():
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6]
    connected = [h for h in atlas if h.number_of_nodes() >= 2 and nx.is_connected(h)]
    outputs = {
        "all_n1-6.g6": atlas,
        "connected_n2-6.g6": connected,
        "connected_n2-5.g6": [h for h in connected if h.number_of_nodes() <= 5],
    }
    for name, graphs in outputs.items():
        (DATA / name).write_bytes(b"".join(g6(h) for h in graphs))
        print(f"{name}: {len(graphs)} graphs")


if __name__ == "__main__":
    main()
