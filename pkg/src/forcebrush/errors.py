"""Exception hierarchy.

Errors split into two families: ordinary input/usage errors, and
consistency failures on branches the theorems say are unreachable.  The
latter carry a JSON-serialisable diagnostic bundle so a reproducer is never
lost.
"""

from __future__ import annotations

import json
from typing import Any


class ForceBrushError(Exception):
    """Base class for every error raised by this package."""


# -- input / parsing -------------------------------------------------------

class GraphError(ForceBrushError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class BadToken(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class EmptyEdgeSet(GraphError):
    pass


class NoEdges(GraphError):
    pass


class IsolatedVertex(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadParams(ForceBrushError, ValueError):
    pass


class NotAcyclic(ForceBrushError, ValueError):
    pass


class NotFull(ForceBrushError, ValueError):
    pass


class InvalidOrder(ForceBrushError, ValueError):
    pass


class BudgetExceeded(ForceBrushError):
    """A solver ran out of its node or time budget; the exact value is unknown."""


# -- consistency failures ----------------------------------------------------

class ConsistencyError(ForceBrushError):
    """A branch that a proven statement rules out was reached.

    ``bundle`` holds everything needed to reproduce the failure.  Callers
    higher up the pipeline enrich it (graph6, forcing set, process, chains)
    before re-raising.
    """

    clause = "consistency"

    def __init__(self, message: str, bundle: dict[str, Any] | None = None):
        super().__init__(message)
        self.bundle: dict[str, Any] = dict(bundle or {})

    def bundle_json(self) -> str:
        doc = {"error": type(self).__name__, "message": str(self), **self.bundle}
        return json.dumps(doc, sort_keys=True, default=_jsonable)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return repr(obj)


class NotForcing(ConsistencyError, ValueError):
    clause = "not_forcing"


class NotInducedPath(ConsistencyError):
    clause = "not_induced_path"


class ConflictingRules(ConsistencyError):
    clause = "conflicting_rules"


class AcyclicityViolation(ConsistencyError):
    """The partial orientation built from forcing chains has a directed cycle."""

    clause = "cycle_found"


class PropertyViolated(ConsistencyError):
    clause = "property_violated"


class WitnessInvalid(ConsistencyError):
    clause = "witness_invalid"
