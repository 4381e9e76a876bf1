"""Finite permutation groups on {0, ..., d-1}, stored fully enumerated.

Permutations are plain tuples of images: ``p[i]`` is the image of ``i``.
Composition follows the right-to-left convention ``compose(p, q)(x) = p(q(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContainmentError, DomainError, MalformedPermutation, NotSemiregular

Perm = tuple


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation x -> p(q(x))."""
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def power(p: Perm, k: int) -> Perm:
    r = identity(len(p))
    if k < 0:
        p, k = inverse(p), -k
    for _ in range(k):
        r = compose(p, r)
    return r


def order(p: Perm) -> int:
    k, q = 1, p
    while not is_identity(q):
        q = compose(p, q)
        k += 1
    return k


def as_perm(images: Sequence[int], d: int | None = None) -> Perm:
    p = tuple(int(x) for x in images)
    if d is not None and len(p) != d:
        raise MalformedPermutation(f"expected {d} images, got {list(p)}")
    if sorted(p) != list(range(len(p))):
        raise MalformedPermutation(f"not a bijection of 0..{len(p) - 1}: {list(p)}")
    return p


def from_cycles(d: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation of degree d from disjoint cycles, e.g. (0, 1, 2)."""
    img = list(range(d))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return as_perm(img, d)


def cycle_string(p: Perm) -> str:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: tuple
    elements: tuple = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def _element_set(self) -> frozenset:
        s = self.__dict__.get("_eset")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_eset", s)
        return s

    def issubgroup(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self._element_set <= other._element_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))


def _closure(d: int, gens: Iterable[Perm]) -> tuple:
    gens = [g for g in gens if not is_identity(g)]
    seen = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def from_images(d: int, gens: Iterable[Sequence[int]]) -> PermutationGroup:
    if d < 2:
        raise DomainError(f"degree must be >= 2, got {d}")
    perms = tuple(as_perm(g, d) for g in gens)
    return PermutationGroup(d, perms, _closure(d, perms))


def symmetric_group(d: int) -> PermutationGroup:
    gens = [from_cycles(d, tuple(range(d)))]
    if d > 2:
        gens.append(from_cycles(d, (0, 1)))
    return from_images(d, gens)


def cyclic_group(d: int) -> PermutationGroup:
    return from_images(d, [from_cycles(d, tuple(range(d)))])


def trivial_group(d: int) -> PermutationGroup:
    return from_images(d, [])


def subgroup(G: PermutationGroup, elements: Iterable[Perm]) -> PermutationGroup:
    """Wrap a subset of G already known to be closed."""
    els = tuple(sorted(set(elements)))
    return PermutationGroup(G.degree, els, els)


@dataclass(frozen=True)
class Classification:
    transitive: bool
    semiregular: bool
    regular: bool
    orbits: tuple


def orbits(G: PermutationGroup) -> tuple:
    seen, out = set(), []
    for i in range(G.degree):
        if i in seen:
            continue
        orb = sorted({g[i] for g in G.elements})
        seen.update(orb)
        out.append(tuple(orb))
    return tuple(out)


def classify(G: PermutationGroup) -> Classification:
    orbs = orbits(G)
    transitive = len(orbs) == 1
    semiregular = all(
        is_identity(g) or all(g[i] != i for i in range(G.degree)) for g in G.elements
    )
    return Classification(transitive, semiregular, transitive and semiregular, orbs)


def _require_subgroup(H: PermutationGroup, G: PermutationGroup) -> None:
    if not H.issubgroup(G):
        raise ContainmentError("first group is not contained in the second")


def preserves_orbits(F: PermutationGroup, Fp: PermutationGroup) -> bool:
    _require_subgroup(F, Fp)
    for orb in orbits(F):
        s = set(orb)
        for g in Fp.generators:
            if {g[i] for i in orb} != s:
                return False
    return True


def point_stabilizer(G: PermutationGroup, a: int) -> PermutationGroup:
    if not 0 <= a < G.degree:
        raise DomainError(f"point {a} out of range for degree {G.degree}")
    return subgroup(G, (g for g in G.elements if g[a] == a))


@dataclass(frozen=True)
class CosetAction:
    """Action of Fp on the left cosets Fp/F, cosets numbered 0..n-1 (0 is F)."""

    n: int
    coset_reps: tuple
    alpha: dict = field(repr=False, compare=False)
    cosets: tuple = field(repr=False, compare=False)

    def __call__(self, sigma: Perm) -> Perm:
        return self.alpha[tuple(sigma)]

    def coset_index(self, sigma: Perm) -> int:
        return self._index[tuple(sigma)]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {g: i for i, c in enumerate(self.cosets) for g in c}
            object.__setattr__(self, "_idx", idx)
        return idx


def coset_action(F: PermutationGroup, Fp: PermutationGroup) -> CosetAction:
    _require_subgroup(F, Fp)
    remaining = set(Fp.elements)
    cosets = []
    # Fp.elements is sorted, so the first unclaimed element is the least member of its coset.
    for g in Fp.elements:
        if g not in remaining:
            continue
        c = tuple(sorted(compose(g, f) for f in F.elements))
        remaining.difference_update(c)
        cosets.append(c)
    reps = tuple(c[0] for c in cosets)
    index = {g: i for i, c in enumerate(cosets) for g in c}
    alpha = {
        s: tuple(index[compose(s, r)] for r in reps)
        for s in Fp.elements
    }
    return CosetAction(len(cosets), reps, alpha, tuple(cosets))


def mapper_table(F: PermutationGroup) -> dict:
    """(b, t) -> the unique element of F sending b to t; requires F semiregular."""
    if not classify(F).semiregular:
        raise NotSemiregular("unique mapping requires a semiregular group")
    table = {}
    for f in F.elements:
        for b in range(F.degree):
            table[(b, f[b])] = f
    return table


def unique_mapper(F: PermutationGroup, b: int, t: int) -> Perm | None:
    if not (0 <= b < F.degree and 0 <= t < F.degree):
        raise DomainError("color out of range")
    return mapper_table(F).get((b, t))


def power_condition(A: PermutationGroup, B: PermutationGroup) -> bool:
    """True iff every non-trivial element of B has a non-trivial power lying in A."""
    _require_subgroup(A, B)
    for b in B.elements:
        if is_identity(b):
            continue
        q, found = b, False
        while not is_identity(q):
            if q in A:
                found = True
                break
            q = compose(b, q)
        if not found:
            return False
    return True


def to_json(G: PermutationGroup) -> dict:
    return {"d": G.degree, "gens": [list(g) for g in G.generators]}
