"""The d-regular tree as the Cayley graph of the free product of d copies of C_2.

A vertex is a reduced word: a tuple over range(d) with no two equal
neighbouring letters; the empty tuple is the basepoint.  The edge between
``v`` and ``v + (c,)`` carries color ``c``.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError

Vertex = tuple

ROOT: Vertex = ()


class EdgeRef(NamedTuple):
    """Edge in canonical form: ``base`` is the shorter endpoint."""

    base: Vertex
    color: int

    @property
    def far(self) -> Vertex:
        return self.base + (self.color,)

    @property
    def endpoints(self) -> tuple:
        return (self.base, self.far)


def vertex_key(v: Vertex) -> tuple:
    return (len(v), v)


def is_reduced(v: Vertex) -> bool:
    return all(v[i] != v[i + 1] for i in range(len(v) - 1))


def neighbor(d: int, v: Vertex, col: int) -> Vertex:
    if not 0 <= col < d:
        raise DomainError(f"color {col} out of range for d={d}")
    if v and v[-1] == col:
        return v[:-1]
    return v + (col,)


def step(v: Vertex, col: int) -> Vertex:
    """Unchecked neighbor()."""
    if v and v[-1] == col:
        return v[:-1]
    return v + (col,)


def multiply(u: Vertex, v: Vertex) -> Vertex:
    """Product of reduced words in W_d (left translation of v by u)."""
    w = list(u)
    for c in v:
        if w and w[-1] == c:
            w.pop()
        else:
            w.append(c)
    return tuple(w)


def edge(v: Vertex, col: int) -> EdgeRef:
    """Canonical form of the edge at v with the given color."""
    if v and v[-1] == col:
        return EdgeRef(v[:-1], col)
    return EdgeRef(v, col)


def common_prefix_len(u: Vertex, v: Vertex) -> int:
    k = 0
    for a, b in zip(u, v):
        if a != b:
            break
        k += 1
    return k


def distance(u: Vertex, v: Vertex) -> int:
    return len(u) + len(v) - 2 * common_prefix_len(u, v)


def edge_distance(v: Vertex, e: EdgeRef) -> int:
    """Distance from a vertex to the nearer endpoint of e."""
    return min(distance(v, e.base), distance(v, e.far))


def toward(v: Vertex, target: Vertex) -> tuple[Vertex, int]:
    """Next vertex on the geodesic from v to target (v != target) and the edge color."""
    k = common_prefix_len(v, target)
    if k == len(v):
        c = target[k]
        return v + (c,), c
    return v[:-1], v[-1]


def edge_color(u: Vertex, w: Vertex) -> int:
    """Color of the edge between adjacent vertices u and w."""
    return w[-1] if len(w) > len(u) else u[-1]


def geodesic(u: Vertex, v: Vertex) -> list[Vertex]:
    k = common_prefix_len(u, v)
    path = [u[:i] for i in range(len(u), k - 1, -1)]
    path.extend(v[:i] for i in range(k + 1, len(v) + 1))
    return path


def geodesic_colors(u: Vertex, v: Vertex) -> list[int]:
    """Edge colors read along the geodesic from u to v."""
    k = common_prefix_len(u, v)
    return list(reversed(u[k:])) + list(v[k:])


def ball(d: int, center: Vertex, R: int) -> list[Vertex]:
    if R < 0:
        raise DomainError("radius must be non-negative")
    out = [center]
    frontier = [(center, None)]
    for _ in range(R):
        nxt = []
        for v, back in frontier:
            for c in range(d):
                if c == back:
                    continue
                w = step(v, c)
                out.append(w)
                nxt.append((w, c))
        frontier = nxt
    out.sort(key=vertex_key)
    return out


def ball_size(d: int, R: int) -> int:
    if d == 2:
        return 2 * R + 1
    return 1 + d * ((d - 1) ** R - 1) // (d - 2)


def edges_near(d: int, e: EdgeRef, R: int) -> list[EdgeRef]:
    """Edges at edge-graph distance <= R from e (sharing-a-vertex adjacency)."""
    seen = {e}
    frontier = [e]
    for _ in range(R):
        nxt = []
        for f in frontier:
            for w in f.endpoints:
                for c in range(d):
                    g = edge(w, c)
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return sorted(seen, key=edge_key)


def edge_key(e: EdgeRef) -> tuple:
    return (vertex_key(e.base), e.color)


def halftree_contains(e: EdgeRef, side: str, v: Vertex) -> bool:
    """Whether v lies in the half-tree of e on the given side ('base' or 'far')."""
    if side not in ("base", "far"):
        raise DomainError(f"side must be 'base' or 'far', got {side!r}")
    on_far = v[: len(e.far)] == e.far
    return on_far if side == "far" else not on_far


def in_subtree(root: Vertex, v: Vertex) -> bool:
    """Whether the geodesic from the basepoint to v passes through root."""
    return v[: len(root)] == root


# serialization

def vertex_str(v: Vertex) -> str:
    return "".join(map(str, v)) if v else "e"


def parse_vertex(s: str) -> Vertex:
    s = s.strip()
    if s in ("e", ""):
        return ROOT
    v = tuple(int(ch) for ch in s)
    if not is_reduced(v):
        raise DomainError(f"vertex {s!r} is not a reduced word")
    return v


def edge_str(e: EdgeRef) -> str:
    return f"{vertex_str(e.base)}:{e.color}"


def parse_edge(s: str) -> EdgeRef:
    word, _, col = s.partition(":")
    if not col:
        raise DomainError(f"edge must look like 'word:color', got {s!r}")
    return edge(parse_vertex(word), int(col))
