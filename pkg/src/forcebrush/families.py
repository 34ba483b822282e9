"""Named graph families.

``random_gnp(n, p, seed)`` draws each pair ``u < v`` in lexicographic order
with probability ``p`` from :class:`random.Random` seeded with ``seed``
(Mersenne Twister, identical on every platform and Python 3 release).
"""

from __future__ import annotations

import random

from .errors import BadParams
from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


_FAMILIES = {
    "path": (path, (int,)),
    "cycle": (cycle, (int,)),
    "complete": (complete, (int,)),
    "star": (star, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "random_gnp": (random_gnp, (int, float, int)),
}


def generate_family(name: str, *params) -> Graph:
    """Build a named family member, e.g. ``generate_family("random_gnp", 8, 0.5, 1)``."""
    try:
        fn, types = _FAMILIES[name]
    except KeyError:
        raise BadParams(f"unknown family {name!r}; choose from {sorted(_FAMILIES)}") from None
    if len(params) != len(types):
        raise BadParams(f"{name} takes {len(types)} parameter(s), got {len(params)}")
    try:
        args = [t(x) for t, x in zip(types, params)]
    except (TypeError, ValueError) as exc:
        raise BadParams(f"bad parameters for {name}: {exc}") from None
    if any(isinstance(a, int) and a < 0 for a in args):
        raise BadParams(f"negative size in {name}{tuple(args)}")
    return fn(*args)


def parse_family_spec(spec: str) -> Graph:
    """Parse ``name:arg1,arg2,...`` (e.g. ``complete_bipartite:2,3``)."""
    name, _, rest = spec.partition(":")
    params = [x.strip() for x in rest.split(",")] if rest else []
    return generate_family(name.strip(), *params)


def is_family_spec(spec: str) -> bool:
    return spec.partition(":")[0].strip() in _FAMILIES
