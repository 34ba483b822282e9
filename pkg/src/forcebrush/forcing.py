"""Zero forcing: color-change closure, exact Z(G), and recorded processes."""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import BadParams, BudgetExceeded, NotForcing
from .graph import Graph


def closure(g: Graph, s: Iterable[int], worklist: str = "queue") -> frozenset[int]:
    """Fixed point of the color-change rule starting from ``s``.

    A colored vertex with exactly one uncolored neighbour colors it.  Each
    vertex keeps a count of its uncolored neighbours so a force costs
    O(deg).  ``worklist`` selects FIFO ("queue") or LIFO ("stack")
    processing; both reach the same set.
    """
    if worklist not in ("queue", "stack"):
        raise BadParams(f"unknown worklist {worklist!r}")
    colored = [False] * g.n
    for v in s:
        colored[v] = True
    uncolored_nbrs = [sum(1 for w in g.adj[v] if not colored[w]) for v in range(g.n)]
    work = deque(v for v in range(g.n) if colored[v] and uncolored_nbrs[v] == 1)
    pop = work.popleft if worklist == "queue" else work.pop
    while work:
        u = pop()
        if uncolored_nbrs[u] != 1:
            continue
        w = next(x for x in g.adj[u] if not colored[x])
        colored[w] = True
        for x in g.adj[w]:
            uncolored_nbrs[x] -= 1
            if colored[x] and uncolored_nbrs[x] == 1:
                work.append(x)
        if uncolored_nbrs[w] == 1:
            work.append(w)
    return frozenset(v for v in range(g.n) if colored[v])


def is_zero_forcing(g: Graph, s: Iterable[int]) -> bool:
    return len(closure(g, s)) == g.n


def zero_forcing_number(
    g: Graph,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Exact Z(g) and the first minimum zero forcing set.

    Candidate sets are tried by ascending size, lexicographically within a
    size.  Sizes below the minimum degree are skipped: the first force needs
    a colored vertex with all but one neighbour colored, so no smaller set
    can force anything.
    """
    if g.n == 0:
        raise BadParams("zero forcing number of the empty graph is undefined")
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    start = max(1, min(g.degree(v) for v in range(g.n)))
    nodes = 0
    for k in range(start, g.n + 1):
        for cand in combinations(range(g.n), k):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceeded(f"node budget {max_nodes} exhausted at size {k}")
            if deadline is not None and nodes & 255 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded(f"time budget {max_seconds}s exhausted at size {k}")
            if is_zero_forcing(g, cand):
                return k, cand
    raise AssertionError("V(g) is always zero forcing")


@dataclass(frozen=True)
class ForcingProcess:
    """An initial colored set plus the forces applied, in order."""

    initial: tuple[int, ...]
    events: tuple[tuple[int, int], ...]

    def forced_by(self) -> dict[int, int]:
        """Map forcer -> the vertex it forces."""
        return dict(self.events)

    def violations(self, g: Graph) -> list[str]:
        """Replay against ``g``; an empty list means the process is valid."""
        problems = []
        colored = [False] * g.n
        for v in self.initial:
            if not 0 <= v < g.n:
                return [f"initial vertex {v} out of range"]
            if colored[v]:
                problems.append(f"initial vertex {v} listed twice")
            colored[v] = True
        forcers: set[int] = set()
        for step, (u, w) in enumerate(self.events):
            if not (0 <= u < g.n and 0 <= w < g.n):
                return problems + [f"event {step}: vertex out of range"]
            if not colored[u]:
                problems.append(f"event {step}: forcer {u} is not colored")
            if u in forcers:
                problems.append(f"event {step}: {u} forces twice")
            if colored[w]:
                problems.append(f"event {step}: {w} is already colored")
            white = [x for x in g.adj[u] if not colored[x]]
            if white != [w]:
                problems.append(f"event {step}: {w} is not the unique uncolored neighbour of {u}")
            forcers.add(u)
            colored[w] = True
        missing = [v for v in range(g.n) if not colored[v]]
        if missing:
            problems.append(f"vertices never colored: {missing}")
        return problems

    def is_valid(self, g: Graph) -> bool:
        return not self.violations(g)


def record_process(
    g: Graph,
    s: Iterable[int],
    rng: random.Random | None = None,
) -> ForcingProcess:
    """Run the color-change rule from ``s`` and record every force.

    Default scheduler: scan colored vertices in ascending order and apply
    the first available force, then rescan.  With ``rng`` the next force is
    drawn uniformly from all available ones instead.
    """
    initial = tuple(sorted(set(s)))
    colored = [False] * g.n
    for v in initial:
        colored[v] = True
    events = []
    while True:
        available = []
        for u in range(g.n):
            if not colored[u]:
                continue
            white = [x for x in g.adj[u] if not colored[x]]
            if len(white) == 1:
                available.append((u, white[0]))
                if rng is None:
                    break
        if not available:
            break
        u, w = available[0] if rng is None else rng.choice(available)
        colored[w] = True
        events.append((u, w))
    if not all(colored):
        raise NotForcing(
            f"{list(initial)} is not a zero forcing set",
            {"n": g.n, "edges": list(g.edges), "initial": list(initial)},
        )
    return ForcingProcess(initial, tuple(events))
