"""Wire formats: compact JSON and text forms shared by the CLI and tests.

Pinned forms:

* graph literal: {"kind":"wheel|fan|cycle|path|custom","n":int,"edges":[[u,v],...]}
  (edges only for "custom");
* configuration text: comma-joined grain counts, "1,2,0,1";
* subgraph: {"vertices":[...],"edges":[[u,v],...]} with sorted entries;
* marked cycle orientation: {"n":int,"ccw_edges":[i,...],"marks":[i,...]}
  where an entry i of ccw_edges denotes the rim edge {i, i+1 mod n};
* marked {L,R}-word text: letters "Lu"/"Lm"/"R" joined by single spaces.
"""

from __future__ import annotations

import json
from typing import Sequence

from .fan import PMWord
from .graphs import Graph, Subgraph, edge, make_cycle, make_fan, make_path, make_wheel
from .polynomial import Polynomial
from .wheel import MarkedCycleOrientation, cycle_orientation_from_ccw


def dumps(obj) -> str:
    """Compact JSON with a stable byte layout (insertion-ordered keys)."""
    return json.dumps(obj, separators=(",", ":"))


def parse_config(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed configuration {text!r}: expected comma-joined integers") from exc


def format_config(config: Sequence[int]) -> str:
    return ",".join(str(x) for x in config)


_FAMILIES = {"wheel": make_wheel, "fan": make_fan, "cycle": make_cycle, "path": make_path}


def graph_to_json(g: Graph) -> dict:
    out: dict = {"kind": g.kind, "n": g.n_nonsink}
    if g.kind not in _FAMILIES:
        out["kind"] = "custom"
        out["edges"] = sorted([u, v] for u, v in g.edges)
    return out


def graph_from_json(obj: dict) -> Graph:
    kind = obj.get("kind")
    n = obj.get("n")
    if not isinstance(n, int):
        raise ValueError("graph literal needs an integer 'n'")
    if kind in _FAMILIES:
        return _FAMILIES[kind](n)
    if kind == "custom":
        raw = obj.get("edges")
        if not isinstance(raw, list):
            raise ValueError("custom graph literal needs an 'edges' list")
        edges = frozenset(edge(u, v) for u, v in raw)
        has_sink = any(0 in e for e in edges)
        return Graph(n, has_sink, edges, kind="custom")
    raise ValueError(f"unknown graph kind {kind!r}")


def config_to_json(g: Graph, config: Sequence[int]) -> dict:
    return {"graph": graph_to_json(g), "config": list(config)}


def config_from_json(obj: dict) -> tuple[Graph, tuple[int, ...]]:
    g = graph_from_json(obj["graph"])
    config = tuple(obj["config"])
    if len(config) != g.n_nonsink:
        raise ValueError("configuration length does not match the graph")
    return g, config


def pmword_to_json(w: PMWord) -> list[str]:
    return list(w.letters)


def pmword_from_json(letters) -> PMWord:
    return PMWord(tuple(letters))


def subgraph_to_json(s: Subgraph) -> dict:
    return {
        "vertices": sorted(s.vertices),
        "edges": sorted([u, v] for u, v in s.edges),
    }


def subgraph_from_json(obj: dict) -> Subgraph:
    verts = obj.get("vertices")
    raw_edges = obj.get("edges", [])
    if not isinstance(verts, list):
        raise ValueError("subgraph literal needs a 'vertices' list")
    return Subgraph(frozenset(verts), frozenset(edge(u, v) for u, v in raw_edges))


def pmo_to_json(mo: MarkedCycleOrientation) -> dict:
    return {
        "n": mo.n,
        "ccw_edges": sorted(mo.ccw_edge_indices()),
        "marks": sorted(mo.marked),
    }


def pmo_from_json(obj: dict) -> MarkedCycleOrientation:
    n = obj.get("n")
    if not isinstance(n, int):
        raise ValueError("marked orientation literal needs an integer 'n'")
    orient = cycle_orientation_from_ccw(n, obj.get("ccw_edges", []))
    return MarkedCycleOrientation(orient, frozenset(obj.get("marks", [])))


def word_to_text(w: PMWord) -> str:
    return str(w)


def polynomial_to_csv(p: Polynomial, header: str = "level,count") -> str:
    lines = [header]
    lines.extend(f"{e},{c}" for e, c in p.items())
    return "\n".join(lines) + "\n"
