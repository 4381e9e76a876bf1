"""Vertex types and neighbourhoods of the graphs X_{n,d}, C_{n,d}, Z_{n,d} and DL(n,n)."""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .. import tree
from ..errors import DomainError
from ..tree import EdgeRef, Vertex


def _pair_key(kv: tuple) -> tuple:
    return (len(kv[0]), kv[0])


class LampConfig(tuple):
    """Finitely supported map from tree vertices to Sigma_n = {0..n-1}.

    Stored as sorted ``(vertex, value)`` pairs with non-zero values only.
    """

    __slots__ = ()

    def __new__(cls, items: Iterable = ()):
        if hasattr(items, "items"):
            items = items.items()
        pairs = sorted(((tuple(v), int(k)) for v, k in items if k), key=_pair_key)
        return super().__new__(cls, pairs)

    @classmethod
    def _trusted(cls, pairs) -> LampConfig:
        return super().__new__(cls, pairs)

    def get(self, v: Vertex) -> int:
        for w, k in self:
            if w == v:
                return k
        return 0

    def as_dict(self) -> dict:
        return dict(self)

    @property
    def support(self) -> list:
        return [v for v, _ in self]

    def with_value(self, v: Vertex, k: int) -> LampConfig:
        pairs = [p for p in self if p[0] != v]
        if k:
            pairs.append((v, k))
            pairs.sort(key=_pair_key)
        return LampConfig._trusted(pairs)

    def settings(self, v: Vertex, n: int) -> list:
        """``[self.with_value(v, k) for k in range(n)]``, sharing the work."""
        rest = [p for p in self if p[0] != v]
        key = _pair_key((v, 0))
        i = next((j for j, p in enumerate(rest) if _pair_key(p) > key), len(rest))
        head, tail = tuple(rest[:i]), tuple(rest[i:])
        out = [LampConfig._trusted(head + tail)]
        out += [LampConfig._trusted(head + ((v, k),) + tail) for k in range(1, n)]
        return out

    def __repr__(self) -> str:
        return f"LampConfig({config_str(self)!r})"


ZERO = LampConfig()


class XVertex(NamedTuple):
    config: LampConfig
    edge: EdgeRef


class CVertex(NamedTuple):
    config: LampConfig
    vertex: Vertex


def x0(a: int = 0) -> XVertex:
    return XVertex(ZERO, EdgeRef(tree.ROOT, a))


# -- X_{n,d} -----------------------------------------------------------------

def x_neighbors(n: int, d: int, x: XVertex) -> list:
    """Neighbours of (f, e) with edge type: 1 = move the edge, 2 = change a lamp on e."""
    f, e = x
    out = []
    for w in e.endpoints:
        for c in range(d):
            if c != e.color:
                out.append((XVertex(f, tree.edge(w, c)), 1))
    fd = f.as_dict()
    for w in e.endpoints:
        cur = fd.get(w, 0)
        for k in range(n):
            if k != cur:
                out.append((XVertex(f.with_value(w, k), e), 2))
    return out


# -- Z_{n,d} -----------------------------------------------------------------

def z_neighbors(n: int, d: int, x: XVertex) -> list:
    """Move e to an adjacent edge e' through the shared vertex w, resetting the lamp at w freely."""
    if d < 2:
        raise DomainError("Z_{n,d} needs d >= 2")
    f, e = x
    out = []
    for w in e.endpoints:
        variants = f.settings(w, n)
        for c in range(d):
            if c == e.color:
                continue
            e2 = tree.edge(w, c)
            out.extend((XVertex(g, e2), None) for g in variants)
    return out


# -- C_{n,d} -----------------------------------------------------------------

def c_neighbors(n: int, d: int, x: CVertex) -> list:
    """Lamplighter moves: walk along a tree edge (type 1) or change the lamp underfoot (type 2)."""
    f, v = x
    out = [(CVertex(f, tree.step(v, c)), 1) for c in range(d)]
    cur = f.get(v)
    for k in range(n):
        if k != cur:
            out.append((CVertex(f.with_value(v, k), v), 2))
    return out


# -- DL(n,n) -----------------------------------------------------------------
#
# A vertex of the (n+1)-regular tree with a distinguished end is written (k, w):
# climb k steps from the reference vertex toward the end, then descend along
# the child labels w.  At every ancestor the child leading back to the reference
# vertex is labelled 0, so (k, w) with k > 0 and w[0] == 0 reduces to (k-1, w[1:]).
# The height (Busemann value) of (k, w) is k - len(w).


class HVertex(NamedTuple):
    up: int
    down: tuple

    @property
    def height(self) -> int:
        return self.up - len(self.down)


def h_parent(v: HVertex) -> HVertex:
    if v.down:
        return HVertex(v.up, v.down[:-1])
    return HVertex(v.up + 1, ())


def h_child(v: HVertex, c: int) -> HVertex:
    if not v.down and v.up > 0 and c == 0:
        return HVertex(v.up - 1, ())
    return HVertex(v.up, v.down + (c,))


class DLVertex(NamedTuple):
    first: HVertex
    second: HVertex


DL_ORIGIN = DLVertex(HVertex(0, ()), HVertex(0, ()))


def dl_neighbors(n: int, x: DLVertex) -> list:
    """One coordinate climbs toward its end while the other descends to any of its n children.

    The heights satisfy height(first) + height(second) == 0 throughout.
    """
    u, w = x
    out = []
    pu, pw = h_parent(u), h_parent(w)
    for c in range(n):
        out.append((DLVertex(pu, h_child(w, c)), None))
    for c in range(n):
        out.append((DLVertex(h_child(u, c), pw), None))
    return out


# -- serialization -----------------------------------------------------------

def config_str(f: LampConfig) -> str:
    return ",".join(f"{tree.vertex_str(v)}:{k}" for v, k in f)


def parse_config(s: str) -> LampConfig:
    s = s.strip()
    if not s:
        return ZERO
    items = {}
    for part in s.split(","):
        v, _, k = part.partition(":")
        items[tree.parse_vertex(v)] = int(k)
    return LampConfig(items)


def xvertex_str(x: XVertex) -> str:
    return f"{config_str(x.config)}|{tree.edge_str(x.edge)}"


def cvertex_str(x: CVertex) -> str:
    return f"{config_str(x.config)}|{tree.vertex_str(x.vertex)}"


def hvertex_str(v: HVertex) -> str:
    return f"{v.up}.{''.join(map(str, v.down)) or 'e'}"


def dlvertex_str(x: DLVertex) -> str:
    return f"{hvertex_str(x.first)}/{hvertex_str(x.second)}"


def vertex_label(x) -> str:
    if isinstance(x, XVertex):
        return xvertex_str(x)
    if isinstance(x, CVertex):
        return cvertex_str(x)
    if isinstance(x, DLVertex):
        return dlvertex_str(x)
    if isinstance(x, tuple) and all(isinstance(c, int) for c in x):
        return tree.vertex_str(x)
    return str(x)
