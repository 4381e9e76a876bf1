"""Named verification batteries; each returns a :class:`Report`."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import permgrp as pg
from . import tree
from .elements import (
    IDENTITY,
    Instance,
    all_words,
    compose,
    generators,
    icc_conjugates,
    random_word,
)
from .errors import TreeLatticeError
from .graphs import (
    XVertex,
    balls_isomorphic,
    cayley_ball_gamma,
    cayley_ball_gff,
    dl_ball,
    gff_act,
    is_identity_map,
    reduce_to_zero,
    x_ball,
    x_neighbors,
    z_ball,
)
from .graphs.spaces import LampConfig
from .tree import ROOT
from .wreath import GammaGroup, embed, truncations_agree, wreath_act, wreath_mul

SUITES = ("cocycle", "embedding", "action", "transitivity", "cayley", "gamma", "dl", "lattice", "icc")


@dataclass
class Report:
    suite: str
    params: dict
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "pass": bool(ok), "detail": detail})

    @property
    def overall(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "checks": self.checks,
                "overall": "pass" if self.overall else "fail"}


def local_perm_from_images(inst: Instance, g, v) -> pg.Perm:
    """Local permutation read off from vertex images alone."""
    gv = inst.apply(g, v)
    return tuple(tree.edge_color(gv, inst.apply(g, tree.step(v, c))) for c in range(inst.d))


# -- suites ---------------------------------------------------------------------

def suite_cocycle(inst: Instance, R: int = 4, **_) -> Report:
    rep = Report("cocycle", {"R": R})
    gens = generators(inst)
    ball = tree.ball(inst.d, ROOT, R)
    bad = 0
    for s, t in itertools.product(gens, repeat=2):
        st = compose(s, t)
        for v in ball:
            lhs = local_perm_from_images(inst, st, v)
            rhs = pg.compose(local_perm_from_images(inst, s, inst.apply(t, v)),
                             local_perm_from_images(inst, t, v))
            if lhs != rhs or lhs != inst.local_perm(st, v):
                bad += 1
    rep.add("cocycle identity", bad == 0,
            f"{len(gens) ** 2} generator pairs x {len(ball)} vertices, {bad} failures")
    bad = 0
    for s in gens:
        sinv = inst.invert(s)
        for v in ball:
            if inst.local_perm(sinv, inst.apply(s, v)) != pg.inverse(inst.local_perm(s, v)):
                bad += 1
    rep.add("inverse cocycle", bad == 0, f"{bad} failures")
    return rep


def suite_embedding(inst: Instance, R: int = 6, seed: int = 0, pairs: int = 100,
                    max_len: int = 6, **_) -> Report:
    rep = Report("embedding", {"R": R, "seed": seed, "pairs": pairs, "max_len": max_len})
    rng = random.Random(seed)
    ball = tree.ball(inst.d, ROOT, R)
    bad = 0
    support_ok = True
    for _ in range(pairs):
        g = random_word(inst, rng.randint(0, max_len), rng)
        h = random_word(inst, rng.randint(0, max_len), rng)
        g_inv = inst.invert(g)
        eg = embed(inst, g, domain=ball)
        eh = embed(inst, h, domain=[inst.apply(g_inv, v) for v in ball])
        egh = embed(inst, compose(g, h), domain=ball)
        bad += len(truncations_agree(wreath_mul(inst, eg, eh, R=R), egh, ball))
        for w in (g, h):
            moving = [inst.apply(w, x) for x in inst.deviation_set(w)]
            if any(len(v) > 2 * len(w) + 1 for v in moving):
                support_ok = False
    rep.add("phi(gh) = phi(g) phi(h)", bad == 0, f"{pairs} pairs on ball {R}, {bad} mismatches")
    rep.add("rho support finite and within 2k+1", support_ok)
    return rep


def suite_action(inst: Instance, R: int = 2, seed: int = 0, words: int = 50,
                 max_len: int = 4, **_) -> Report:
    rep = Report("action", {"R": R, "seed": seed, "words": words})
    n, d = inst.n, inst.d
    xb = x_ball(n, d, R, a=inst.a)
    gens = generators(inst)
    bad = 0
    for s in gens:
        for i, j, t in xb.edges():
            u, w = gff_act(inst, s, xb.vertices[i]), gff_act(inst, s, xb.vertices[j])
            if (w, t) not in x_neighbors(n, d, u):
                bad += 1
    rep.add("generators act by type-preserving automorphisms", bad == 0,
            f"{len(gens)} generators x {len(xb.edges())} edges, {bad} failures")
    rng = random.Random(seed)
    bad = 0
    for _ in range(words):
        g = random_word(inst, rng.randint(0, max_len), rng)
        dom = set()
        for x in xb.vertices:
            dom.update(inst.apply(g, v) for v in x.config.support)
        dom.update(inst.apply(g, v) for v in inst.deviation_set(g))
        t = embed(inst, g, domain=dom)
        for x in xb.vertices:
            if wreath_act(inst, t, x) != gff_act(inst, g, x):
                bad += 1
    rep.add("wreath action of phi(g) = twisted action of g", bad == 0,
            f"{words} words x {len(xb)} vertices, {bad} failures")
    return rep


def suite_transitivity(inst: Instance, R: int = 2, **_) -> Report:
    rep = Report("transitivity", {"R": R})
    verts = tree.ball(inst.d, ROOT, R)
    edges = tree.edges_near(inst.d, inst.base_edge, R)
    bad = count = 0
    for values in itertools.product(range(inst.n), repeat=len(verts)):
        f = LampConfig(zip(verts, values))
        for e in edges:
            x = XVertex(f, e)
            tr = reduce_to_zero(inst, x)
            sizes = [len(f)] + [len(s.result.config) for s in tr.steps]
            ok = (tr.final == XVertex(LampConfig(), e) and len(tr.steps) == len(f)
                  and all(a - b == 1 for a, b in zip(sizes, sizes[1:])))
            bad += not ok
            count += 1
    rep.add("reduce_to_zero clears one lamp per step", bad == 0, f"{count} vertices, {bad} failures")
    return rep


def suite_cayley(inst: Instance, R: int = 4, **_) -> Report:
    rep = Report("cayley", {"R": R})
    cb = cayley_ball_gff(inst, R)
    xb = x_ball(inst.n, inst.d, R, a=inst.a)
    rep.add("orbit map is a typed isometry onto the X-ball", is_identity_map(cb.ball, xb, True),
            f"{len(cb.ball)} vs {len(xb)} vertices")
    first = {}
    bad = 0
    for w in all_words(inst, R):
        y = gff_act(inst, w, XVertex(LampConfig(), inst.base_edge))
        if y in first:
            bad += not inst.equal(first[y], w)
        else:
            first[y] = w
    rep.add("words with equal orbit images are equal", bad == 0, f"{bad} failures")
    return rep


def suite_gamma(n: int = 2, d: int = 3, R: int = 4, **_) -> Report:
    rep = Report("gamma", {"n": n, "d": d, "R": R})
    G = GammaGroup(n, d)
    cb = cayley_ball_gamma(G, R)
    rep.add("orbit map is a typed isometry onto the X-ball",
            is_identity_map(cb.ball, x_ball(n, d, R), True))
    ball = tree.ball(d, ROOT, R)
    order_ok = all(
        G.word_apply(((i, 1),) * d, v) == v and
        all(G.word_apply(((i, 1),) * k, G.pivots[1 - i]) != G.pivots[1 - i] for k in range(1, d))
        for i in (0, 1) for v in ball)
    rep.add("rotations have order d", order_ok)
    free_ok = True
    for L in range(1, 7):
        for pivs in ((0, 1), (1, 0)):
            for exps in itertools.product(range(1, d), repeat=L):
                word = tuple((pivs[k % 2], e) for k, e in enumerate(exps))
                if G.word_apply_edge(word, G.base_edge) == G.base_edge:
                    free_ok = False
    rep.add("alternating words move the base edge", free_ok)
    return rep


def suite_dl(n: int = 2, R: int = 3, **_) -> Report:
    rep = Report("dl", {"n": n, "R": R})
    Z, D = z_ball(n, 2, R), dl_ball(n, R)
    rep.add("Z_{n,2} ball isomorphic to DL(n,n) ball", balls_isomorphic(Z, D) is not None,
            f"{len(Z)} vertices")
    return rep


def suite_lattice(A: pg.PermutationGroup | None = None, B: pg.PermutationGroup | None = None,
                  **_) -> Report:
    if A is None or B is None:
        B = pg.cyclic_group(4)
        A = pg.from_images(4, [[2, 3, 0, 1]])
    rep = Report("lattice", {"d": B.degree, "A": [list(g) for g in A.generators],
                             "B": [list(g) for g in B.generators]})
    value = pg.power_condition(A, B)
    brute = all(
        any(pg.power(b, k) in A for k in range(1, pg.order(b)))
        for b in B.elements if not pg.is_identity(b))
    rep.add("power_condition matches brute force", value == brute, f"power_condition = {value}")
    rep.checks[-1]["value"] = value
    return rep


def suite_icc(inst: Instance, N: int = 20, seed: int = 0, **_) -> Report:
    rep = Report("icc", {"N": N, "seed": seed})
    rng = random.Random(seed)
    stab = [s for s in generators(inst) if s.pivot == 0]
    g = IDENTITY
    while inst.is_identity(g):
        g = random_word(inst, 4, rng, stab)
    conj = icc_conjugates(inst, g, N)
    distinct = all(not inst.equal(conj[i], conj[j]) for i in range(N) for j in range(i))
    fixes = all(inst.apply(c, ROOT) == ROOT for c in conj)
    rep.add("conjugates pairwise distinct", len(conj) == N and distinct, f"{len(conj)} conjugates")
    rep.add("conjugates fix the basepoint", fixes)
    return rep


def run_suite(name: str, inst: Instance | None = None, R: int | None = None, **kw) -> Report:
    if name not in SUITES:
        raise TreeLatticeError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn = globals()[f"suite_{name}"]
    if R is not None:
        kw["R"] = R
    if name in ("gamma", "dl", "lattice"):
        return fn(**kw)
    if inst is None:
        raise TreeLatticeError(f"suite {name!r} needs an instance")
    rep = fn(inst, **kw)
    rep.params = {"d": inst.d, "F": [list(g) for g in inst.F.generators],
                  "Fprime": [list(g) for g in inst.Fp.generators], "base_color": inst.a,
                  **rep.params}
    return rep
