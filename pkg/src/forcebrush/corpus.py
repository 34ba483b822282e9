"""Exhaustive corpus runs checking B(G) <= Z(L(G)) and Z(G) <= Z(L(G)).

Each input graph becomes one report row.  Rows are computed independently
(optionally in worker processes) and merged in input order, so the report
is byte-identical for any ``jobs`` value as long as timings are off.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .brushing import brushing_number
from .errors import BudgetExceeded, ConsistencyError, ForceBrushError
from .forcing import record_process, zero_forcing_number
from .formats import graph6_str, iter_graph6_lines
from .graph import Graph, components, line_graph, strip_isolated
from .transfer import transfer_from_process

SCHEMA = "forcebrush.corpus-report/1"

ROW_FIELDS = (
    "index", "graph6", "n", "m", "isolated", "components",
    "z_g", "z_lg", "b_g", "b_status", "b_upper", "y_size",
    "random_processes", "flags", "ok", "error", "diagnostic",
)
CSV_FIELDS = (
    "index", "graph6", "n", "m", "isolated", "components",
    "z_g", "z_lg", "b_g", "b_status", "b_upper", "y_size", "ok", "error",
)


BUNDLED = ("all_n1-6", "connected_n2-5", "connected_n2-6")


def bundled_corpus(name: str) -> list[Graph]:
    """A frozen graph6 corpus shipped with the package (see ``BUNDLED``)."""
    if name not in BUNDLED:
        raise KeyError(f"unknown corpus {name!r}; choose from {BUNDLED}")
    data = resources.files("forcebrush").joinpath("data", f"{name}.g6").read_bytes()
    return list(iter_graph6_lines(data))


@dataclass(frozen=True)
class RunSettings:
    budget_ms: int | None = None
    brush_max_edges: int = 12
    random_processes: int = 0
    seed: int = 0
    timings: bool = False

    def seconds(self) -> float | None:
        return None if self.budget_ms is None else self.budget_ms / 1000.0


def analyse_graph(index: int, g: Graph, settings: RunSettings) -> dict[str, Any]:
    """Compute one report row; never raises on per-graph failures."""
    row: dict[str, Any] = dict.fromkeys(ROW_FIELDS)
    row.update(index=index, graph6=graph6_str(g), n=g.n, m=g.m, error=None, diagnostic=None)
    timings = {"z_g": 0.0, "z_lg": 0.0, "b_g": 0.0, "transfer": 0.0}
    flags: dict[str, bool] = {}
    try:
        _fill_row(row, g, settings, flags, timings)
    except ConsistencyError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        row["diagnostic"] = json.loads(exc.bundle_json())
    except BudgetExceeded as exc:
        row["error"] = f"BudgetExceeded: {exc}"
    except ForceBrushError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    row["flags"] = flags
    row["ok"] = row["error"] is None and all(flags.values())
    if settings.timings:
        row["timings_ms"] = {k: round(v * 1000, 3) for k, v in timings.items()}
    return row


def _timed(timings: dict[str, float], key: str, fn, *args, **kw):
    t0 = time.perf_counter()
    try:
        return fn(*args, **kw)
    finally:
        timings[key] += time.perf_counter() - t0


def _fill_row(row, g, settings, flags, timings):
    budget = settings.seconds()
    core, _, isolated = strip_isolated(g)
    comps = [c for c, _ in components(core)]
    row["isolated"] = isolated
    row["components"] = len(comps)
    # Every isolated vertex must be in any zero forcing set.
    z_g = isolated
    z_lg = 0
    b_g: int | None = 0
    b_status = "exact" if comps else "degenerate"
    y_size = 0
    lemma_random = True
    for comp in comps:
        z_g += _timed(timings, "z_g", zero_forcing_number, comp, max_seconds=budget)[0]
        lg, idx = line_graph(comp)
        k, zset = _timed(timings, "z_lg", zero_forcing_number, lg, max_seconds=budget)
        z_lg += k
        t0 = time.perf_counter()
        result = transfer_from_process(comp, lg, idx, record_process(lg, zset))
        rng = random.Random(f"{settings.seed}:{row['graph6']}:{comp.edges}")
        for _ in range(settings.random_processes):
            extra = transfer_from_process(comp, lg, idx, record_process(lg, zset, rng))
            lemma_random &= all(extra.checks.values())
        timings["transfer"] += time.perf_counter() - t0
        for name, value in result.checks.items():
            flags[name] = flags.get(name, True) and value
        y_size += len(result.y)
        if b_g is not None:
            if comp.m > settings.brush_max_edges:
                b_g, b_status = None, "skipped"
            else:
                try:
                    b_g += _timed(timings, "b_g", brushing_number, comp, max_seconds=budget)[0]
                except BudgetExceeded:
                    b_g, b_status = None, "timeout"
    row.update(z_g=z_g, z_lg=z_lg if comps else None, b_g=b_g, b_status=b_status,
               b_upper=z_lg if comps else None, y_size=y_size,
               random_processes=settings.random_processes)
    flags["lemma_random"] = lemma_random
    if comps:
        # Theorem 2 concerns the graph without its isolated vertices.
        flags["thm2_z"] = z_g - isolated <= z_lg
        flags["thm2_y"] = y_size <= z_lg
        flags["thm1"] = (b_g <= z_lg) if b_g is not None else flags["paths_equal_k"]


def _row_task(args):
    return analyse_graph(*args)


def run_corpus(
    graphs: Iterable[Graph],
    settings: RunSettings = RunSettings(),
    jobs: int = 1,
    source: str = "",
    diagnostics_dir: str | Path | None = None,
) -> dict[str, Any]:
    tasks = [(i, g, settings) for i, g in enumerate(graphs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        rows = [_row_task(t) for t in tasks]
    if diagnostics_dir is not None:
        out = Path(diagnostics_dir)
        for row in rows:
            if row["diagnostic"] is not None or not row["ok"]:
                out.mkdir(parents=True, exist_ok=True)
                bundle = row["diagnostic"] or {"graph6": row["graph6"], "flags": row["flags"]}
                (out / f"row{row['index']:06d}.json").write_text(json.dumps(bundle, indent=2))
    return {
        "schema": SCHEMA,
        "source": source,
        "settings": {
            "budget_ms": settings.budget_ms,
            "brush_max_edges": settings.brush_max_edges,
            "random_processes": settings.random_processes,
            "seed": settings.seed,
        },
        "rows": rows,
        "summary": summarize(rows),
    }


def summarize(rows: list[dict[str, Any]]) -> dict[str, Any]:
    done = [r for r in rows if r["error"] is None and r["z_lg"] is not None]
    b_gaps = [r["z_lg"] - r["b_g"] for r in done if r["b_g"] is not None]
    z_gaps = [r["z_lg"] - (r["z_g"] - r["isolated"]) for r in done]
    violations = sum(1 for r in rows if r["diagnostic"] is not None
                     or (r["error"] is None and not r["ok"]))
    return {
        "graphs": len(rows),
        "ok": sum(1 for r in rows if r["ok"]),
        "errors": sum(1 for r in rows if r["error"] is not None),
        "violations": violations,
        "b_exact": sum(1 for r in rows if r["b_status"] == "exact"),
        "b_unknown": sum(1 for r in rows if r["b_status"] in ("skipped", "timeout")),
        "max_gap_zl_minus_b": max(b_gaps, default=None),
        "max_gap_zl_minus_z": max(z_gaps, default=None),
        "y_below_k": sum(1 for r in done if r["y_size"] < r["z_lg"]),
        "failed": violations > 0,
    }


def report_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_csv(report: dict[str, Any]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in report["rows"]:
        writer.writerow(row)
    return buf.getvalue()
