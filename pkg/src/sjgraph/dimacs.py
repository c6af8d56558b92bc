"""Graph file I/O: DIMACS undirected format and a JSON graph document.

DIMACS files use the canonical vertex order with 1-based indices:
`p edge V E` followed by one `e i j` line per edge.  The JSON document
keeps the spec, the vertex sign strings (when available), and a 0-based
edge list, so a written graph reloads with identical canonical indices.
"""

from __future__ import annotations

import json
from pathlib import Path

from .families import DistanceGraph, GraphSpec, SignedVector


def write_dimacs(g: DistanceGraph, path) -> None:
    m = len(g)
    lines = [f"c {g.label()}", f"p edge {m} {g.n_edges}"]
    for i in range(m):
        row = g.adjacency[i] >> (i + 1) << (i + 1)
        while row:
            low = row & -row
            lines.append(f"e {i + 1} {low.bit_length()}")
            row ^= low
    Path(path).write_text("\n".join(lines) + "\n")


def read_dimacs(path) -> DistanceGraph:
    """Read an undirected DIMACS graph; the result has no vertex data."""
    m = None
    edges = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            m = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if m is None:
        raise ValueError(f"{path}: no 'p edge' header line")
    adjacency = [0] * m
    for i, j in edges:
        if not (0 <= i < m and 0 <= j < m):
            raise ValueError(f"{path}: edge ({i + 1},{j + 1}) outside 1..{m}")
        if i != j:
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
    return DistanceGraph(f"external:{Path(path).name}", None, adjacency)


def write_graph_json(g: DistanceGraph, path) -> None:
    m = len(g)
    edges = []
    for i in range(m):
        row = g.adjacency[i] >> (i + 1) << (i + 1)
        while row:
            low = row & -row
            edges.append([i, low.bit_length() - 1])
            row ^= low
    doc = {
        "format": "sjgraph-graph",
        "spec": g.spec.to_dict() if isinstance(g.spec, GraphSpec) else str(g.spec),
        "n_vertices": m,
        "vertices": [v.to_string() for v in g.vertices] if g.vertices is not None else None,
        "edges": edges,
    }
    Path(path).write_text(json.dumps(doc) + "\n")


def read_graph_json(path) -> DistanceGraph:
    doc = json.loads(Path(path).read_text())
    if doc.get("format") != "sjgraph-graph":
        raise ValueError(f"{path}: not a graph document")
    m = doc["n_vertices"]
    spec = doc["spec"]
    if isinstance(spec, dict):
        spec = GraphSpec.from_dict(spec)
    vertices = doc.get("vertices")
    if vertices is not None:
        vertices = [SignedVector.from_string(s) for s in vertices]
    adjacency = [0] * m
    for i, j in doc["edges"]:
        if i != j:
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
    return DistanceGraph(spec, vertices, adjacency)
