"""Elements of G(F, F'): tree automorphisms whose local permutations lie in F'
everywhere and in F outside a finite set.

An element is a product of factors.  Each factor is either a canonical
:class:`Generator` (a pivot vertex and a permutation there) or a finitary
:class:`Portrait`.  Local permutations and images are computed lazily by
walking geodesics from a factor's anchor and propagating through F, then
combined across factors with the cocycle rule

    sigma(gh, v) = sigma(g, h v) . sigma(h, v).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Union

from . import permgrp as pg
from . import tree
from .errors import (
    CapabilityError,
    InstanceValidationError,
    InvalidElement,
    InvalidPortrait,
    PreconditionError,
)
from .permgrp import Perm, PermutationGroup
from .tree import ROOT, EdgeRef, Vertex


class Generator(NamedTuple):
    """The element fixing v_pivot with local permutation ``sigma`` there and
    local permutations in F everywhere else."""

    pivot: int
    sigma: Perm

    def inverse(self) -> Generator:
        return Generator(self.pivot, pg.inverse(self.sigma))


class Portrait(NamedTuple):
    """Automorphism sending ``anchor`` to ``image`` whose local permutations are
    given on a finite subtree and propagated through F outside it."""

    anchor: Vertex
    image: Vertex
    deviations: tuple  # sorted ((vertex, perm), ...)

    @property
    def deviation_map(self) -> dict:
        return dict(self.deviations)


Factor = Union[Generator, Portrait]


@dataclass(frozen=True)
class Element:
    """Product factors[0] * factors[1] * ... acting right to left."""

    factors: tuple = ()

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: Element) -> Element:
        return compose(self, other)


IDENTITY = Element(())


def as_element(g) -> Element:
    if isinstance(g, Element):
        return g
    if isinstance(g, (Generator, Portrait)):
        return Element((g,))
    raise TypeError(f"cannot interpret {g!r} as an element")


def compose(*gs) -> Element:
    out = []
    for g in gs:
        out.extend(as_element(g).factors)
    return Element(tuple(out))


def _sorted_devs(devs: Mapping) -> tuple:
    return tuple(sorted(((tuple(v), tuple(p)) for v, p in devs.items()),
                        key=lambda kv: tree.vertex_key(kv[0])))


class Instance:
    """A validated pair F < F' of permutation groups on d colors with a base color."""

    def __init__(self, d: int, F: PermutationGroup, Fp: PermutationGroup, a: int):
        self.d = d
        self.F = F
        self.Fp = Fp
        self.a = a
        self.alpha = pg.coset_action(F, Fp)
        self.n = self.alpha.n
        self.classification = pg.classify(F)
        self.regular = self.classification.regular
        self.Fp_a = pg.point_stabilizer(Fp, a)
        self.v0: Vertex = ROOT
        self.v1: Vertex = (a,)
        self.base_edge = EdgeRef(ROOT, a)
        self.id = pg.identity(d)
        self._rule = pg.mapper_table(F)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Instance(d={self.d}, |F|={self.F.order}, |F'|={self.Fp.order}, a={self.a}, n={self.n})"

    def pivot(self, i: int) -> Vertex:
        return self.v0 if i == 0 else self.v1

    def propagate(self, parent_perm: Perm, color: int) -> Perm:
        """The unique element of F agreeing with ``parent_perm`` on ``color``."""
        tau = self._rule.get((color, parent_perm[color]))
        if tau is None:
            raise InvalidElement(
                f"color {color} cannot be sent to {parent_perm[color]} by F")
        return tau

    # -- factor evaluation -------------------------------------------------

    def _portrait_of(self, f: Factor) -> Portrait:
        if isinstance(f, Portrait):
            return f
        p = self.pivot(f.pivot)
        return Portrait(p, p, ((p, f.sigma),))

    def _eval(self, f: Factor, v: Vertex) -> tuple:
        """(image of v, local permutation at v) for a single factor."""
        cache = self._cache.get(f)
        if cache is None:
            p = self._portrait_of(f)
            devs = p.deviation_map
            cache = {p.anchor: (p.image, devs[p.anchor])}
            self._cache[f] = cache
        hit = cache.get(v)
        if hit is not None:
            return hit
        p = self._portrait_of(f)
        devs = p.deviation_map
        path = []
        u = v
        while u not in cache:
            path.append(u)
            u, _ = tree.toward(u, p.anchor)
        img, perm = cache[u]
        for w in reversed(path):
            c = tree.edge_color(u, w)
            t = perm[c]
            img = tree.step(img, t)
            perm = devs.get(w)
            if perm is None:
                tau = self._rule.get((c, t))
                if tau is None:
                    raise InvalidElement(
                        f"propagation fails at {tree.vertex_str(w)}: color {c} -> {t} not in F")
                perm = tau
            cache[w] = (img, perm)
            u = w
        return cache[v]

    def _invert_factor(self, f: Factor) -> Factor:
        if isinstance(f, Generator):
            return f.inverse()
        devs = {}
        for v, s in f.deviations:
            img, _ = self._eval(f, v)
            devs[img] = pg.inverse(s)
        return Portrait(f.image, f.anchor, _sorted_devs(devs))

    # -- public evaluation -------------------------------------------------

    def local_perm(self, g, v: Vertex) -> Perm:
        g = as_element(g)
        perm, cur = self.id, tuple(v)
        for f in reversed(g.factors):
            img, s = self._eval(f, cur)
            perm = pg.compose(s, perm)
            cur = img
        return perm

    def apply(self, g, v: Vertex) -> Vertex:
        cur = tuple(v)
        for f in reversed(as_element(g).factors):
            cur = self._eval(f, cur)[0]
        return cur

    def apply_with_perm(self, g, v: Vertex) -> tuple:
        perm, cur = self.id, tuple(v)
        for f in reversed(as_element(g).factors):
            img, s = self._eval(f, cur)
            perm = pg.compose(s, perm)
            cur = img
        return cur, perm

    def apply_edge(self, g, e: EdgeRef) -> EdgeRef:
        u, s = self.apply_with_perm(g, e.base)
        return tree.edge(u, s[e.color])

    def invert(self, g) -> Element:
        g = as_element(g)
        return Element(tuple(self._invert_factor(f) for f in reversed(g.factors)))

    # -- deviations and identity ------------------------------------------

    def deviation_candidates(self, g) -> set:
        """Finite superset of the deviation set, from the factors' deviation subtrees."""
        g = as_element(g)
        inv = [self._invert_factor(f) for f in g.factors]
        cands = set()
        for j, f in enumerate(g.factors):
            for y in self._portrait_of(f).deviation_map:
                x = y
                for m in range(j + 1, len(inv)):
                    x = self._eval(inv[m], x)[0]
                cands.add(x)
        return cands

    def deviation_radius(self, g) -> int:
        """Radius bound for the deviation set: 2k+1 for a word of k generators,
        and the analogous displacement bound when portraits are present."""
        g = as_element(g)
        bound, shift = 0, 0
        for f in reversed(g.factors):
            p = self._portrait_of(f)
            rad = max(len(v) for v in p.deviation_map)
            bound = max(bound, rad + shift)
            shift += len(p.anchor) + len(p.image)
        if all(isinstance(f, Generator) for f in g.factors):
            bound = min(bound, 2 * len(g.factors) + 1) if g.factors else 0
        return bound

    def deviation_set(self, g, scan_radius: int | None = None) -> set:
        """Vertices where the local permutation of g is outside F.

        By default the exact candidate set is filtered; with ``scan_radius`` the
        whole ball of that radius around the basepoint is scanned instead.
        """
        if scan_radius is None:
            verts = self.deviation_candidates(g)
        else:
            verts = tree.ball(self.d, ROOT, scan_radius)
        return {v for v in verts if self.local_perm(g, v) not in self.F}

    def local_perm_field(self, g, vertices: Iterable[Vertex]) -> dict:
        """local_perm(g, v) for every v in ``vertices``.

        Off the deviation set the value is forced by a neighbour's value
        (edge consistency plus semiregularity), so connected vertex sets cost
        one walk per component and per deviating vertex.
        """
        g = as_element(g)
        verts = set(map(tuple, vertices))
        dev = self.deviation_set(g)
        out = {}
        for seed in sorted(verts, key=tree.vertex_key):
            if seed in out:
                continue
            out[seed] = self.local_perm(g, seed)
            stack = [seed]
            while stack:
                u = stack.pop()
                pu = out[u]
                for c in range(self.d):
                    w = tree.step(u, c)
                    if w in verts and w not in out:
                        out[w] = self.local_perm(g, w) if w in dev else self._rule[(c, pu[c])]
                        stack.append(w)
        return out

    def require_regular(self, what: str) -> None:
        if not self.regular:
            raise CapabilityError(f"{what} requires F to be regular")

    def fixes_x0(self, g) -> bool:
        """Whether g fixes the X-vertex (zero configuration, base edge)."""
        if self.apply_edge(g, self.base_edge) != self.base_edge:
            return False
        return not self.deviation_set(g)

    def is_identity(self, g) -> bool:
        self.require_regular("is_identity")
        g = as_element(g)
        if not g.factors:
            return True
        return self.apply(g, ROOT) == ROOT and self.fixes_x0(g)

    def equal(self, g, h) -> bool:
        return self.is_identity(compose(g, self.invert(h)))


# -- construction -------------------------------------------------------------

def make_instance(d: int, F: PermutationGroup, Fp: PermutationGroup, a: int = 0) -> Instance:
    if F.degree != d or Fp.degree != d:
        raise InstanceValidationError("degree-mismatch", f"groups must have degree {d}")
    if not 0 <= a < d:
        raise InstanceValidationError("base-color", f"base color {a} out of range")
    if not F.issubgroup(Fp):
        raise InstanceValidationError("containment", "F is not a subgroup of F'")
    if F == Fp:
        raise InstanceValidationError("equal-groups", "F must be a proper subgroup of F'")
    if not pg.classify(F).semiregular:
        raise InstanceValidationError("not-semiregular", "F must be semiregular")
    if not pg.preserves_orbits(F, Fp):
        raise InstanceValidationError("orbit-violation", "F' does not preserve the F-orbits")
    return Instance(d, F, Fp, a)


def reference_instance(name: str) -> Instance:
    """The three worked instances: A (d=3, C3 < S3), B (d=4, C4 < D4), C (d=4, V4 < S4)."""
    name = name.upper()
    if name == "A":
        return make_instance(3, pg.from_images(3, [[1, 2, 0]]),
                             pg.from_images(3, [[1, 2, 0], [1, 0, 2]]), 0)
    if name == "B":
        return make_instance(4, pg.from_images(4, [[1, 2, 3, 0]]),
                             pg.from_images(4, [[1, 2, 3, 0], [0, 3, 2, 1]]), 0)
    if name == "C":
        return make_instance(4, pg.from_images(4, [[1, 0, 3, 2], [2, 3, 0, 1]]),
                             pg.symmetric_group(4), 0)
    raise KeyError(f"unknown reference instance {name!r}")


def nontrivial_pivot_perms(inst: Instance) -> list:
    """Sorted (F u F'_a) minus the identity."""
    return sorted(s for s in set(inst.F.elements) | set(inst.Fp_a.elements)
                  if not pg.is_identity(s))


def generators(inst: Instance) -> list[Generator]:
    inst.require_regular("canonical generators")
    perms = nontrivial_pivot_perms(inst)
    return [Generator(i, s) for i in (0, 1) for s in perms]


def generator_type(inst: Instance, gen: Generator) -> int:
    """1 if the pivot permutation lies in F (tree move), 2 if it fixes the base color."""
    return 1 if gen.sigma in inst.F else 2


def make_portrait(inst: Instance, anchor: Vertex, anchor_image: Vertex,
                  deviations: Mapping) -> Element:
    anchor, anchor_image = tuple(anchor), tuple(anchor_image)
    devs = {tuple(v): tuple(p) for v, p in deviations.items()}
    if anchor not in devs:
        raise InvalidPortrait("deviation region must contain the anchor")
    for v, p in devs.items():
        if not tree.is_reduced(v) or any(not 0 <= c < inst.d for c in v):
            raise InvalidPortrait(f"bad vertex {v!r}")
        if p not in inst.Fp:
            raise InvalidPortrait(f"local permutation at {tree.vertex_str(v)} is not in F'")
    for v in devs:
        if v != anchor and tree.toward(v, anchor)[0] not in devs:
            raise InvalidPortrait(
                f"deviation region is not connected at {tree.vertex_str(v)}")
    for v, p in devs.items():
        for c in range(inst.d):
            w = tree.step(v, c)
            q = devs.get(w)
            if q is not None:
                if p[c] != q[c]:
                    raise InvalidPortrait(
                        f"edge {tree.edge_str(tree.edge(v, c))}: "
                        f"{p[c]} != {q[c]}", edge=tree.edge(v, c))
            elif (c, p[c]) not in inst._rule:
                raise InvalidPortrait(
                    f"cannot propagate across edge {tree.edge_str(tree.edge(v, c))}",
                    edge=tree.edge(v, c))
    return Element((Portrait(anchor, anchor_image, _sorted_devs(devs)),))


# -- words ----------------------------------------------------------------------

def random_word(inst: Instance, length: int, rng: random.Random,
                gens: list | None = None) -> Element:
    gens = gens if gens is not None else generators(inst)
    return Element(tuple(rng.choice(gens) for _ in range(length)))


def all_words(inst: Instance, max_length: int, gens: list | None = None):
    """Every word of length <= max_length, shortest first."""
    gens = gens if gens is not None else generators(inst)
    level = [()]
    yield IDENTITY
    for _ in range(max_length):
        level = [w + (s,) for w in level for s in gens]
        for w in level:
            yield Element(w)


def format_word(inst: Instance, g) -> str:
    perms = nontrivial_pivot_perms(inst)
    toks = []
    for f in as_element(g).factors:
        if not isinstance(f, Generator):
            raise ValueError("only words in the canonical generators have a string form")
        toks.append(f"g{f.pivot}.s{perms.index(f.sigma)}")
    return " ".join(toks) if toks else "1"


def parse_word(inst: Instance, text: str) -> Element:
    perms = nontrivial_pivot_perms(inst)
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        body, _, exp = tok.partition("^")
        gpart, _, spart = body.partition(".")
        if not (gpart.startswith("g") and spart.startswith("s")):
            raise ValueError(f"bad generator token {tok!r}")
        gen = Generator(int(gpart[1:]), perms[int(spart[1:])])
        if gen.pivot not in (0, 1):
            raise ValueError(f"pivot must be 0 or 1 in {tok!r}")
        if exp not in ("", "1", "-1"):
            raise ValueError(f"exponent must be 1 or -1 in {tok!r}")
        out.append(gen.inverse() if exp == "-1" else gen)
    return Element(tuple(out))


def portrait_to_json(p: Portrait) -> dict:
    return {
        "anchor": tree.vertex_str(p.anchor),
        "anchor_image": tree.vertex_str(p.image),
        "deviations": [{"vertex": tree.vertex_str(v), "perm": list(s)} for v, s in p.deviations],
    }


def portrait_from_json(inst: Instance, obj: dict) -> Element:
    return make_portrait(
        inst,
        tree.parse_vertex(obj["anchor"]),
        tree.parse_vertex(obj["anchor_image"]),
        {tree.parse_vertex(r["vertex"]): tuple(r["perm"]) for r in obj["deviations"]},
    )


# -- ICC sampler ---------------------------------------------------------------

def first_moved_vertex(inst: Instance, g) -> Vertex | None:
    bound = inst.deviation_radius(g) + 1
    for v in tree.ball(inst.d, ROOT, bound):
        if inst.apply(g, v) != v:
            return v
    return None


def subtree_lambdas(inst: Instance, v: Vertex, count: int) -> list[Element]:
    """Distinct elements fixing every vertex outside the subtree below v.

    The j-th one deviates only at a vertex at depth j below v, with a
    non-trivial permutation fixing the color toward the basepoint.
    """
    out = []
    w = v
    for j in range(count):
        if j:
            w = w + (min(c for c in range(inst.d) if c != w[-1]),)
        back = w[-1]
        sigma = next(s for s in inst.Fp.elements
                     if s[back] == back and not pg.is_identity(s))
        devs = {w[:i]: inst.id for i in range(len(w))}
        devs[w] = sigma
        out.append(make_portrait(inst, ROOT, ROOT, devs))
    return out


def icc_conjugates(inst: Instance, g, N: int) -> list[Element]:
    """N pairwise-distinct conjugates of a non-trivial element fixing the basepoint."""
    inst.require_regular("icc_conjugates")
    g = as_element(g)
    if N < 1:
        raise PreconditionError("N must be positive")
    if inst.apply(g, ROOT) != ROOT:
        raise PreconditionError("element must fix the basepoint")
    if inst.is_identity(g):
        raise PreconditionError("element must be non-trivial")
    v = first_moved_vertex(inst, g)
    if v is None:
        raise PreconditionError("no moved vertex found within the deviation bound")
    out = [g]
    for lam in subtree_lambdas(inst, v, N - 1):
        out.append(compose(lam, g, inst.invert(lam)))
    return out
