"""Breadth-first balls in locally finite graphs, and their DOT / GraphML / JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Hashable
from xml.sax.saxutils import quoteattr

from .spaces import vertex_label


@dataclass
class GraphBall:
    """Radius-R ball around ``center``.

    ``vertices`` are sorted by (distance, label); ``adjacency[i]`` is the
    sorted list of ``(j, edge_type)`` for the neighbours of vertex i inside the
    ball.  Only edges with an endpoint at distance < radius are kept, so every
    interior vertex has its full neighbourhood and boundary vertices only
    their edges inward.
    """

    kind: str
    center: Hashable
    radius: int
    vertices: list
    dist: list
    adjacency: list
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [vertex_label(v) for v in self.vertices]
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self) -> list:
        """Sorted (i, j, type) with i < j."""
        return sorted((i, j, t) for i, nb in enumerate(self.adjacency) for j, t in nb if i < j)

    def interior(self) -> list:
        return [i for i, r in enumerate(self.dist) if r < self.radius]

    def type_counts(self, i: int) -> dict:
        out = {}
        for _, t in self.adjacency[i]:
            out[t] = out.get(t, 0) + 1
        return out


def bfs_ball(neighbor_fn: Callable, center, R: int, kind: str = "graph") -> GraphBall:
    """``neighbor_fn(v)`` returns ``[(w, edge_type), ...]``; edge_type may be None."""
    if R < 0:
        raise ValueError("radius must be non-negative")
    dist = {center: 0}
    frontier = [center]
    nbrs = {}
    for r in range(R + 1):
        nxt = []
        for v in frontier:
            nb = neighbor_fn(v)
            nbrs[v] = nb
            if r == R:
                continue
            for w, _ in nb:
                if w not in dist:
                    dist[w] = r + 1
                    nxt.append(w)
        frontier = nxt
    labels = {v: vertex_label(v) for v in dist}
    order = sorted(dist, key=lambda v: (dist[v], labels[v]))
    index = {v: i for i, v in enumerate(order)}
    adjacency = []
    for v in order:
        seen = {}
        for w, t in nbrs[v]:
            j = index.get(w)
            if j is not None and min(dist[v], dist[w]) < R:
                seen[j] = t
        adjacency.append(sorted(seen.items(), key=lambda it: it[0]))
    return GraphBall(kind, center, R, order, [dist[v] for v in order], adjacency,
                     [labels[v] for v in order])


def from_edges(kind: str, center, R: int, vertices: dict, edges: dict) -> GraphBall:
    """Build a ball from explicit data: ``vertices`` maps vertex -> distance,
    ``edges`` maps frozenset({u, v}) -> type."""
    labels = {v: vertex_label(v) for v in vertices}
    order = sorted(vertices, key=lambda v: (vertices[v], labels[v]))
    index = {v: i for i, v in enumerate(order)}
    adjacency = [[] for _ in order]
    for key, t in edges.items():
        u, v = tuple(key)
        adjacency[index[u]].append((index[v], t))
        adjacency[index[v]].append((index[u], t))
    for nb in adjacency:
        nb.sort()
    return GraphBall(kind, center, R, order, [vertices[v] for v in order], adjacency,
                     [labels[v] for v in order])


def export_dot(B: GraphBall) -> str:
    lines = [f"graph {json.dumps(B.kind)} {{"]
    for lab in B.labels:
        lines.append(f"  {json.dumps(lab)};")
    for i, j, t in B.edges():
        attr = f" [type={t}]" if t is not None else ""
        lines.append(f"  {json.dumps(B.labels[i])} -- {json.dumps(B.labels[j])}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graphml(B: GraphBall) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="type" for="edge" attr.name="type" attr.type="int"/>',
        f'  <graph id={quoteattr(B.kind)} edgedefault="undirected">',
    ]
    for lab in B.labels:
        lines.append(f"    <node id={quoteattr(lab)}/>")
    for i, j, t in B.edges():
        src, dst = quoteattr(B.labels[i]), quoteattr(B.labels[j])
        if t is None:
            lines.append(f"    <edge source={src} target={dst}/>")
        else:
            lines.append(f'    <edge source={src} target={dst}><data key="type">{t}</data></edge>')
    lines += ["  </graph>", "</graphml>"]
    return "\n".join(lines) + "\n"


def export_json(B: GraphBall) -> str:
    return json.dumps({"vertices": B.labels, "edges": [list(e) for e in B.edges()]},
                      separators=(",", ":"))
