"""Ball truncations of the wreath product G_{n,d}, the twisted embedding of
G(F, F'), and the lattice Gamma_{n,d} = C_n wr (C_d * C_d)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import permgrp as pg
from . import tree
from .elements import IDENTITY, Element, Instance, as_element, compose
from .errors import DomainError, RadiusError
from .graphs.spaces import LampConfig, XVertex
from .tree import ROOT, EdgeRef, Vertex


def rho(inst: Instance, g, v: Vertex, g_inv: Element | None = None) -> pg.Perm:
    """alpha of the local permutation of g at g^-1(v).

    Evaluated as alpha(sigma(g^-1, v)^-1), which walks the tree once.
    """
    if g_inv is None:
        g_inv = inst.invert(g)
    return inst.alpha(pg.inverse(inst.local_perm(g_inv, v)))


@dataclass(frozen=True)
class WreathTruncation:
    """An element ((sigma_v), gamma) of G_{n,d} known on a finite set of vertices.

    ``assignments`` holds the non-identity values; vertices of ``domain`` not
    listed carry the identity.  ``complete`` records that every value moving
    0 lies inside the domain, which is what the action on X_{n,d} needs.
    """

    n: int
    assignments: dict
    domain: frozenset
    gamma: Element
    complete: bool

    def value(self, v: Vertex) -> pg.Perm:
        if v not in self.domain:
            raise RadiusError(f"vertex {tree.vertex_str(v)} outside the truncation")
        return self.assignments.get(v, pg.identity(self.n))

    def moves_zero(self) -> list:
        return sorted((v for v, s in self.assignments.items() if s[0] != 0),
                      key=tree.vertex_key)


def identity_truncation(n: int, domain: Iterable[Vertex]) -> WreathTruncation:
    return WreathTruncation(n, {}, frozenset(domain), IDENTITY, True)


def support_bound(inst: Instance, g) -> int:
    """Radius of the smallest basepoint ball containing every v with rho(g, v) moving 0."""
    g = as_element(g)
    return max((len(inst.apply(g, x)) for x in inst.deviation_set(g)), default=0)


def embed(inst: Instance, g, R: int | None = None,
          domain: Iterable[Vertex] | None = None) -> WreathTruncation:
    """phi(g) = (rho_g, g) restricted to ball(R) or to an explicit vertex set.

    Without either, R is the smallest radius holding every 0-moving value.
    """
    g = as_element(g)
    moving = {inst.apply(g, x) for x in inst.deviation_set(g)}
    if domain is None:
        need = max((len(v) for v in moving), default=0)
        if R is None:
            R = need
        elif R < need:
            raise RadiusError(f"radius {R} too small, need {need}", required=need)
        domain = tree.ball(inst.d, ROOT, R)
    domain = frozenset(tuple(v) for v in domain)
    field = inst.local_perm_field(inst.invert(g), domain)
    assignments = {}
    for v, s in field.items():
        r = inst.alpha(pg.inverse(s))
        if not pg.is_identity(r):
            assignments[v] = r
    return WreathTruncation(inst.n, assignments, domain, g, moving <= domain)


def wreath_mul(inst: Instance, a: WreathTruncation, b: WreathTruncation,
               R: int | None = None) -> WreathTruncation:
    """(psi, gamma gamma') with psi_v = a_v . b_{gamma^-1 v}, on ball(R) or wherever defined."""
    if a.n != b.n:
        raise DomainError("truncations over different Sigma_n")
    g_inv = inst.invert(a.gamma)
    if R is None:
        verts = [v for v in a.domain if inst.apply(g_inv, v) in b.domain]
    else:
        verts = tree.ball(inst.d, ROOT, R)
    assignments = {}
    for v in verts:
        w = inst.apply(g_inv, v)
        if v not in a.domain or w not in b.domain:
            raise RadiusError(f"product undefined at {tree.vertex_str(v)} for radius {R}")
        s = pg.compose(a.value(v), b.value(w))
        if not pg.is_identity(s):
            assignments[v] = s
    domain = frozenset(verts)
    complete = a.complete and b.complete
    if complete:
        needed = set(a.moves_zero())
        needed.update(inst.apply(a.gamma, w) for w in b.moves_zero())
        complete = needed <= domain
    return WreathTruncation(a.n, assignments, domain, compose(a.gamma, b.gamma), complete)


def truncations_agree(a: WreathTruncation, b: WreathTruncation,
                      vertices: Iterable[Vertex]) -> list:
    """Vertices where the function parts differ."""
    return [v for v in vertices if a.value(v) != b.value(v)]


def wreath_act(inst: Instance, t: WreathTruncation, x: XVertex) -> XVertex:
    """((sigma_v . f_{gamma^-1 v}), gamma e)."""
    if not t.complete:
        raise RadiusError("truncation does not contain every lamp-moving assignment")
    f, e = x
    new = {}
    for w, k in f:
        v = inst.apply(t.gamma, w)
        new[v] = t.value(v)[k]
    for v in t.moves_zero():
        if v not in new:
            new[v] = t.assignments[v][0]
    return XVertex(LampConfig(new), inst.apply_edge(t.gamma, e))


def truncation_to_json(inst: Instance, t: WreathTruncation) -> dict:
    from .elements import format_word
    return {
        "assignments": [{"vertex": tree.vertex_str(v), "perm": list(t.assignments[v])}
                        for v in sorted(t.assignments, key=tree.vertex_key)],
        "gamma": format_word(inst, t.gamma),
    }


# -- Gamma_{n,d} = C_n wr (C_d * C_d) --------------------------------------------

@dataclass(frozen=True)
class GammaElement:
    """(lamp, gamma): lamp maps vertices to Z_n, word is a reduced product of
    syllables (pivot, exponent) in the rotations u_0, u_1."""

    lamp: LampConfig
    word: tuple = ()


class GammaGroup:
    """Gamma_{n,d} acting on T_d and X_{n,d}.

    u_i fixes v_i (v_0 = basepoint, v_1 = (a,)) and has constant local
    permutation omega = (0 1 ... d-1); C_n acts on Sigma_n by adding 1.
    """

    def __init__(self, n: int, d: int, a: int = 0):
        if n < 2 or d < 3:
            raise DomainError("Gamma_{n,d} needs n >= 2 and d >= 3")
        self.n, self.d, self.a = n, d, a
        self.pivots = (ROOT, (a,))
        self.base_edge = EdgeRef(ROOT, a)
        self.identity = GammaElement(LampConfig(), ())

    def generators(self) -> list[GammaElement]:
        out = []
        for p in self.pivots:
            for k in range(1, self.n):
                out.append(GammaElement(LampConfig({p: k}), ()))
        for i in (0, 1):
            for k in range(1, self.d):
                out.append(GammaElement(LampConfig(), ((i, k),)))
        return out

    @staticmethod
    def generator_type(s: GammaElement) -> int:
        return 1 if s.word else 2

    # tree action of rotation words

    def rotate(self, pivot: int, exp: int, v: Vertex) -> Vertex:
        p = self.pivots[pivot]
        img = p
        for c in tree.geodesic_colors(p, v):
            img = tree.step(img, (c + exp) % self.d)
        return img

    def word_apply(self, word: tuple, v: Vertex) -> Vertex:
        for pivot, exp in reversed(word):
            v = self.rotate(pivot, exp, v)
        return v

    def word_apply_edge(self, word: tuple, e: EdgeRef) -> EdgeRef:
        base = self.word_apply(word, e.base)
        shift = sum(exp for _, exp in word)
        return tree.edge(base, (e.color + shift) % self.d)

    def word_inverse(self, word: tuple) -> tuple:
        return tuple((p, (-k) % self.d) for p, k in reversed(word))

    def word_mul(self, u: tuple, w: tuple) -> tuple:
        out = list(u)
        for p, k in w:
            if out and out[-1][0] == p:
                k2 = (out[-1][1] + k) % self.d
                out.pop()
                if k2:
                    out.append((p, k2))
            elif k % self.d:
                out.append((p, k % self.d))
        return tuple(out)

    # group law

    def mul(self, x: GammaElement, y: GammaElement) -> GammaElement:
        lamp = x.lamp.as_dict()
        for w, k in y.lamp:
            v = self.word_apply(x.word, w)
            lamp[v] = (lamp.get(v, 0) + k) % self.n
        return GammaElement(LampConfig(lamp), self.word_mul(x.word, y.word))

    def inverse(self, x: GammaElement) -> GammaElement:
        winv = self.word_inverse(x.word)
        lamp = {self.word_apply(winv, v): (-k) % self.n for v, k in x.lamp}
        return GammaElement(LampConfig(lamp), winv)

    def act(self, x: GammaElement, pt: XVertex) -> XVertex:
        f, e = pt
        lamp = x.lamp.as_dict()
        for w, k in f:
            v = self.word_apply(x.word, w)
            lamp[v] = (lamp.get(v, 0) + k) % self.n
        return XVertex(LampConfig(lamp), self.word_apply_edge(x.word, e))

    def orbit_point(self, x: GammaElement) -> XVertex:
        return self.act(x, XVertex(LampConfig(), self.base_edge))


def format_gamma_word(word: tuple) -> str:
    return " ".join(f"u{p}^{k}" for p, k in word) or "1"


def parse_gamma_word(text: str) -> tuple:
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        body, _, exp = tok.partition("^")
        out.append((int(body[1:]), int(exp or 1)))
    return tuple(out)


def gamma_to_json(x: GammaElement) -> dict:
    return {
        "lamp": [{"vertex": tree.vertex_str(v), "value": k} for v, k in x.lamp],
        "word": format_gamma_word(x.word),
    }


def gamma_from_json(G: GammaGroup, obj: dict) -> GammaElement:
    lamp = {tree.parse_vertex(r["vertex"]): int(r["value"]) % G.n for r in obj["lamp"]}
    word = G.word_mul((), parse_gamma_word(obj["word"]))
    return GammaElement(LampConfig(lamp), word)
