"""JSON graph+colouring documents and DOT export.

A document is one JSON object::

    {"version": 1, "vertex_count": n, "part_sizes": [...] | null,
     "remainder_size": p, "color_count": j | null,
     "edges": [[u, v, colour], ...], "meta": {...}}

Edges are ``[u, v]`` pairs when there is no colouring. They are sorted, and
keys are emitted in sorted order, so equal inputs give byte-identical
documents. ``part_sizes = null`` marks a general graph whose edges are
exactly the listed ones.
"""

from __future__ import annotations

import json
from typing import Any, NamedTuple

from rainbowk.graph import EdgeColoring, Graph, MultipartiteGraph, MultipartiteSpec

VERSION = 1


class DocumentError(ValueError):
    pass


class GraphDocument(NamedTuple):
    graph: Graph
    coloring: EdgeColoring | None
    meta: dict[str, Any]


def to_dict(g: Graph, coloring: EdgeColoring | None = None,
            meta: dict[str, Any] | None = None) -> dict[str, Any]:
    if coloring is not None and coloring.graph != g:
        raise ValueError("colouring belongs to a different graph")
    doc: dict[str, Any] = {
        "version": VERSION,
        "vertex_count": g.vertex_count,
        "part_sizes": None,
        "remainder_size": 0,
        "color_count": None,
    }
    if isinstance(g, MultipartiteGraph):
        doc["part_sizes"] = list(g.spec.part_sizes)
        doc["remainder_size"] = g.spec.remainder_size
    if coloring is None:
        doc["edges"] = [[u, v] for u, v in g.edges]
    else:
        doc["color_count"] = coloring.color_count
        doc["edges"] = [[u, v, c] for u, v, c in coloring.triples()]
    if meta:
        doc["meta"] = meta
    return doc


def encode(g: Graph, coloring: EdgeColoring | None = None,
           meta: dict[str, Any] | None = None) -> str:
    return json.dumps(to_dict(g, coloring, meta), sort_keys=True,
                      separators=(",", ":")) + "\n"


def _int(doc: dict[str, Any], key: str, optional: bool = False) -> int | None:
    value = doc.get(key)
    if value is None and optional:
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"field {key!r} must be an integer, got {value!r}")
    return value


def from_dict(doc: Any) -> GraphDocument:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise DocumentError("field 'edges' must be a list")
    color_count = _int(doc, "color_count", optional=True)
    width = 2 if color_count is None else 3
    triples = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != width
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise DocumentError(f"malformed edge entry {e!r}")
        u, v = e[0], e[1]
        if u >= v:
            raise DocumentError(f"edge {e!r} must be listed as [min, max]")
        triples.append(tuple(e))
    keys = [t[:2] for t in triples]
    if keys != sorted(keys) or len(set(keys)) != len(keys):
        raise DocumentError("edges must be sorted and free of duplicates")

    part_sizes = doc.get("part_sizes")
    try:
        if part_sizes is None:
            n = _int(doc, "vertex_count")
            g: Graph = Graph(n, keys)
        else:
            if not isinstance(part_sizes, list):
                raise DocumentError("field 'part_sizes' must be a list or null")
            spec = MultipartiteSpec(tuple(part_sizes), _int(doc, "remainder_size"))
            g = MultipartiteGraph(spec)
            if "vertex_count" in doc and doc["vertex_count"] != g.vertex_count:
                raise DocumentError("vertex_count disagrees with part sizes")
            listed = set(keys)
            for u, v in keys:
                if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count):
                    raise DocumentError(f"edge ({u}, {v}) out of range")
                if not g.adjacency[u, v]:
                    raise DocumentError(f"({u}, {v}) is not an edge of this multipartite graph")
            if len(listed) != g.edge_count:
                raise DocumentError(
                    f"document lists {len(listed)} of {g.edge_count} edges; colouring must be total")
    except DocumentError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc)) from exc

    coloring = None
    if color_count is not None:
        try:
            coloring = EdgeColoring(g, {(u, v): c for u, v, c in triples}, color_count)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise DocumentError("field 'meta' must be an object")
    return GraphDocument(g, coloring, meta)


def decode(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return from_dict(doc)


def to_dot(g: Graph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    if coloring is not None:
        # palette indices 1..9 map onto the brewer set19 scheme
        lines.append("  edge [colorscheme=set19];")
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges:
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f"  {u} -- {v} [color={int(coloring.matrix[u, v])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
