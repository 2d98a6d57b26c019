"""JSON formats for metric spaces, graphs, hypergraphs and verdicts.

Distances travel as exact rational strings, "p" or "p/q" (integer
literals are also accepted on input; floats are rejected, they cannot
represent the equalities this library lives on).  Parsers validate
structure and metric axioms, so a loaded object is always usable.

  metric     {"points": ["a", ...], "dist": [["0", "1", ...], ...]}
  graph      {"n": 6, "edges": [[0, 1], ...]}
  hypergraph {"n": 7, "triples": [[0, 1, 2], ...]}
  verdict    {"verdict": "metric"|"nonmetric", "witness"?: <metric>,
              "stats": {"nodes": n, "conflicts": {...},
                        "leaves": {"solved": n, "infeasible": n},
                        "pruned": n}}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .decider import SearchStats, Verdict
from .hypergraphs import Graph, Hypergraph3
from .metric import MetricSpace, validate_metric

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL.match(value):
            raise ValueError(f"malformed rational string: {value!r}")
        return Fraction(value)
    raise ValueError(f"distances must be rational strings or integers, got {type(value).__name__}")


def metric_to_dict(m: MetricSpace) -> dict:
    return {
        "points": list(m.points),
        "dist": [[format_rational(d) for d in row] for row in m.dist],
    }


def metric_from_dict(data: dict) -> MetricSpace:
    if not isinstance(data, dict) or "points" not in data or "dist" not in data:
        raise ValueError("metric JSON needs 'points' and 'dist'")
    points = data["points"]
    dist = data["dist"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise ValueError("'points' must be a list of strings")
    if not isinstance(dist, list) or any(not isinstance(row, list) for row in dist):
        raise ValueError("'dist' must be a list of rows")
    rows = [[parse_rational(x) for x in row] for row in dist]
    return validate_metric(points, rows)


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_dict(data: dict) -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError("graph JSON needs 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    edges = data["edges"]
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or not all(isinstance(v, int) for v in e)
        for e in edges
    ):
        raise ValueError("'edges' must be a list of [u, v] integer pairs")
    return Graph.from_edges(n, edges)


def hypergraph_to_dict(h: Hypergraph3) -> dict:
    return {"n": h.n, "triples": [list(t) for t in h.sorted_triples()]}


def hypergraph_from_dict(data: dict) -> Hypergraph3:
    if not isinstance(data, dict) or "n" not in data or "triples" not in data:
        raise ValueError("hypergraph JSON needs 'n' and 'triples'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    triples = data["triples"]
    if not isinstance(triples, list) or any(
        not isinstance(t, list) or len(t) != 3 or not all(isinstance(v, int) for v in t)
        for t in triples
    ):
        raise ValueError("'triples' must be a list of [a, b, c] integer triples")
    return Hypergraph3.from_triples(n, triples)


def verdict_to_dict(v: Verdict) -> dict:
    out: dict = {"verdict": "metric" if v.metric else "nonmetric"}
    if v.witness is not None:
        out["witness"] = metric_to_dict(v.witness)
    out["stats"] = {
        "nodes": v.stats.nodes,
        "conflicts": dict(sorted(v.stats.conflicts.items())),
        "leaves": {"solved": v.stats.leaves_solved, "infeasible": v.stats.leaves_infeasible},
        "pruned": v.stats.pruned,
    }
    return out


def verdict_from_dict(data: dict) -> Verdict:
    if not isinstance(data, dict) or data.get("verdict") not in ("metric", "nonmetric"):
        raise ValueError("verdict JSON needs 'verdict': 'metric' or 'nonmetric'")
    stats_data = data.get("stats", {})
    leaves = stats_data.get("leaves", {})
    stats = SearchStats(
        nodes=stats_data.get("nodes", 0),
        conflicts=dict(stats_data.get("conflicts", {})),
        leaves_solved=leaves.get("solved", 0),
        leaves_infeasible=leaves.get("infeasible", 0),
        pruned=stats_data.get("pruned", 0),
    )
    witness = metric_from_dict(data["witness"]) if "witness" in data else None
    return Verdict(data["verdict"] == "metric", witness, stats)


def dumps(obj: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)


def loads(text: str) -> dict:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    return data
