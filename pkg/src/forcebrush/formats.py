"""graph6 (short form) and edge-list text formats."""

from __future__ import annotations

from typing import Iterator

from .errors import BadToken, DuplicateEdge, MalformedGraph6, SelfLoop
from .graph import Graph

GRAPH6_HEADER = b">>graph6<<"
MAX_SHORT_N = 62


def _upper_triangle(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one short-form graph6 record (n <= 62).

    A leading ``>>graph6<<`` header and surrounding whitespace are ignored.
    Edges come out sorted lexicographically.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise MalformedGraph6("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b} outside 63..126")
    if data[0] == 126:
        raise MalformedGraph6("only the short form (n <= 62) is supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    pad = 6 * len(body) - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedGraph6("non-zero padding bits")
    bits >>= pad
    edges = []
    for k, (i, j) in enumerate(_upper_triangle(n)):
        if bits >> (nbits - 1 - k) & 1:
            edges.append((i, j))
    return Graph(n, sorted(edges))


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` in short-form graph6, without header or newline."""
    if g.n > MAX_SHORT_N:
        raise MalformedGraph6(f"n={g.n} exceeds the short form limit of {MAX_SHORT_N}")
    out = bytearray([g.n + 63])
    acc = 0
    width = 0
    for i, j in _upper_triangle(g.n):
        acc = acc << 1 | g.has_edge(i, j)
        width += 1
        if width == 6:
            out.append(acc + 63)
            acc = width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out)


def graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def iter_graph6_lines(data: bytes | str) -> Iterator[Graph]:
    """Parse a corpus: one graph6 record per non-blank line."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    for line in data.splitlines():
        if line.strip():
            yield parse_graph6(line)


def parse_edgelist(text: str) -> Graph:
    """Parse ``u v`` lines, optionally preceded by ``n <count>``.

    Blank lines and ``#`` comments are skipped.  Without a declared count,
    ``n`` is one more than the largest index seen.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first and tokens[0] == "n":
            first = False
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise BadToken(f"line {lineno}: expected 'n <count>'")
            declared = int(tokens[1])
            continue
        first = False
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise BadToken(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None and declared < top:
        raise BadToken(f"declared n={declared} but vertex {top - 1} appears")
    return Graph(declared if declared is not None else top, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graphs(data: bytes | str, fmt: str = "graph6") -> list[Graph]:
    """Read all graphs in ``data``: many for graph6, exactly one for edgelist."""
    if fmt == "graph6":
        return list(iter_graph6_lines(data))
    if fmt == "edgelist":
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        return [parse_edgelist(data)]
    raise ValueError(f"unknown format {fmt!r}")
