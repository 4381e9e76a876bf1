"""Actions of G(F, F'), Gamma_{n,d} and C_n wr W_d on their graphs; support reduction; Cayley balls."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial

from .. import permgrp as pg
from .. import tree
from ..elements import (
    IDENTITY,
    Element,
    Instance,
    as_element,
    compose,
    generator_type,
    generators,
    make_portrait,
)
from ..errors import InvalidElement
from ..tree import ROOT, EdgeRef, Vertex
from .ball import GraphBall, bfs_ball, from_edges
from .spaces import (
    DL_ORIGIN,
    ZERO,
    CVertex,
    LampConfig,
    XVertex,
    c_neighbors,
    dl_neighbors,
    x_neighbors,
    z_neighbors,
)


def gff_act(inst: Instance, g, x: XVertex) -> XVertex:
    """gamma . (f, e) = (f^gamma, gamma e) with (f^gamma)_v = rho_{gamma,v} . f_{gamma^-1 v}."""
    g = as_element(g)
    if not g.factors:
        return x
    f, e = x
    new = {}
    for w, k in f:
        v, s = inst.apply_with_perm(g, w)
        new[v] = inst.alpha(s)[k]
    for w in inst.deviation_set(g):
        v, s = inst.apply_with_perm(g, w)
        if v not in new:
            new[v] = inst.alpha(s)[0]
    return XVertex(LampConfig(new), inst.apply_edge(g, e))


# -- standard balls ------------------------------------------------------------

def x_ball(n: int, d: int, R: int, center: XVertex | None = None, a: int = 0) -> GraphBall:
    center = center or XVertex(ZERO, EdgeRef(ROOT, a))
    return bfs_ball(partial(x_neighbors, n, d), center, R, kind=f"X_{n}_{d}")


def z_ball(n: int, d: int, R: int, center: XVertex | None = None, a: int = 0) -> GraphBall:
    center = center or XVertex(ZERO, EdgeRef(ROOT, a))
    return bfs_ball(partial(z_neighbors, n, d), center, R, kind=f"Z_{n}_{d}")


def c_ball(n: int, d: int, R: int, center: CVertex | None = None) -> GraphBall:
    center = center or CVertex(ZERO, ROOT)
    return bfs_ball(partial(c_neighbors, n, d), center, R, kind=f"C_{n}_{d}")


def dl_ball(n: int, R: int) -> GraphBall:
    return bfs_ball(partial(dl_neighbors, n), DL_ORIGIN, R, kind=f"DL_{n}_{n}")


# -- support reduction ---------------------------------------------------------

@dataclass(frozen=True)
class ReductionStep:
    vertex: Vertex
    sigma: pg.Perm
    element: Element
    result: XVertex


@dataclass(frozen=True)
class ReductionTrace:
    start: XVertex
    steps: tuple
    final: XVertex


def reduce_to_zero(inst: Instance, x: XVertex) -> ReductionTrace:
    """Bring (f, e) to ((0), e) by elements fixing e, clearing one lamp per step.

    Each step clears the lamp farthest from e (ties by vertex order) using an
    element that fixes e, has local permutation sigma in F'_{a'} at that
    vertex, is trivial on the far side of the edge toward e, and lies in F
    everywhere else.
    """
    steps = []
    cur = x
    e = x.edge
    while cur.config:
        f = cur.config
        far = max(tree.edge_distance(v, e) for v in f.support)
        v0 = min((v for v in f.support if tree.edge_distance(v, e) == far), key=tree.vertex_key)
        if v0 in e.endpoints:
            other = e.far if v0 == e.base else e.base
        else:
            target = e.base if tree.distance(v0, e.base) < tree.distance(v0, e.far) else e.far
            other, _ = tree.toward(v0, target)
        col = tree.edge_color(v0, other)
        k = f.get(v0)
        sigma = next((s for s in inst.Fp.elements
                      if s[col] == col and inst.alpha(s)[k] == 0), None)
        if sigma is None:
            raise InvalidElement(f"no sigma fixing color {col} clears lamp value {k}")
        h = make_portrait(inst, v0, v0, {v0: sigma, other: inst.id})
        nxt = gff_act(inst, h, cur)
        if len(nxt.config) != len(f) - 1 or nxt.edge != e:
            raise InvalidElement("reduction step did not shrink the support by one")
        steps.append(ReductionStep(v0, sigma, h, nxt))
        cur = nxt
    return ReductionTrace(x, tuple(steps), cur)


# -- Cayley balls --------------------------------------------------------------

@dataclass
class CayleyBall:
    """A Cayley-graph ball pushed through the orbit map.

    ``ball`` has the orbit-map images as vertices; ``words`` maps each image to
    the first group element (in BFS order) reaching it.
    """

    ball: GraphBall
    words: dict


def _cayley_bfs(identity, gens, mul, orbit, gtype, R: int, kind: str) -> CayleyBall:
    center = orbit(identity)
    dist = {center: 0}
    words = {center: identity}
    edges = {}
    frontier = [identity]
    for r in range(R):
        nxt = []
        for g in frontier:
            x = orbit(g)
            for s in gens:
                h = mul(g, s)
                y = orbit(h)
                if y not in dist:
                    dist[y] = r + 1
                    words[y] = h
                    nxt.append(h)
                edges[frozenset((x, y))] = gtype(s)
        frontier = nxt
    return CayleyBall(from_edges(kind, center, R, dist, edges), words)


def cayley_ball_gff(inst: Instance, R: int) -> CayleyBall:
    """Ball of Cay(G(F,F')*, S), vertices identified with gamma x_0 in X_{n,d}."""
    gens = generators(inst)
    origin = XVertex(ZERO, inst.base_edge)
    orbit_cache = {}

    def orbit(g: Element) -> XVertex:
        y = orbit_cache.get(g)
        if y is None:
            y = orbit_cache[g] = gff_act(inst, g, origin)
        return y

    return _cayley_bfs(IDENTITY, gens, compose, orbit,
                       partial(generator_type, inst), R, f"Cay_GFF_{inst.n}_{inst.d}")


def cayley_ball_gamma(G, R: int) -> CayleyBall:
    """Ball of Cay(Gamma_{n,d}, generators), vertices identified with orbit points in X_{n,d}."""
    return _cayley_bfs(G.identity, G.generators(), G.mul, G.orbit_point,
                       G.generator_type, R, f"Cay_Gamma_{G.n}_{G.d}")


# C_n wr W_d: elements (lamp, w) with w a reduced word; W_d acts on itself by
# left multiplication, so lamp positions translate by w.

def lamp_wd_generators(n: int, d: int) -> list:
    lamps = [(LampConfig({ROOT: k}), ROOT) for k in range(1, n)]
    moves = [(ZERO, (c,)) for c in range(d)]
    return moves + lamps


def lamp_wd_mul(n: int, x: tuple, y: tuple) -> tuple:
    f, w = x
    f2, w2 = y
    lamp = f.as_dict()
    for v, k in f2:
        u = tree.multiply(w, v)
        lamp[u] = (lamp.get(u, 0) + k) % n
    return (LampConfig(lamp), tree.multiply(w, w2))


def cayley_ball_lamp_wd(n: int, d: int, R: int) -> CayleyBall:
    """Ball of Cay(C_n wr W_d, A u X); (f, w) is the lamplighter vertex (f, w) of C_{n,d}."""
    return _cayley_bfs(
        (ZERO, ROOT), lamp_wd_generators(n, d), partial(lamp_wd_mul, n),
        lambda g: CVertex(g[0], g[1]), lambda s: 2 if s[0] else 1, R, f"Cay_LampW_{n}_{d}")


def cayley_ball(source, R: int, n: int | None = None, d: int | None = None) -> CayleyBall:
    """Dispatch on ``source``: an Instance, a GammaGroup, or the string 'lamp_wd'."""
    from ..wreath import GammaGroup

    if isinstance(source, Instance):
        return cayley_ball_gff(source, R)
    if isinstance(source, GammaGroup):
        return cayley_ball_gamma(source, R)
    if source == "lamp_wd":
        return cayley_ball_lamp_wd(n, d, R)
    raise ValueError(f"unknown Cayley source {source!r}")
