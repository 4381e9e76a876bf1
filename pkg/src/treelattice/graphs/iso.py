"""Center-fixing isomorphism search between graph balls."""

from __future__ import annotations

from .ball import GraphBall


def _refine(balls: list, respect_types: bool) -> list:
    """Joint color refinement; colors are comparable across the given balls."""
    colors = []
    for B in balls:
        cols = []
        for i in range(len(B)):
            types = tuple(sorted(B.type_counts(i).items(), key=repr)) if respect_types else ()
            cols.append((B.dist[i], B.degree(i), types))
        colors.append(cols)
    n_classes = -1
    while True:
        table: dict = {}
        new = []
        for B, cols in zip(balls, colors):
            out = []
            for i in range(len(B)):
                sig = (cols[i], tuple(sorted(
                    ((cols[j], t if respect_types else None) for j, t in B.adjacency[i]),
                    key=repr)))
                out.append(table.setdefault(sig, len(table)))
            new.append(out)
        colors = new
        if len(table) == n_classes:
            return colors
        n_classes = len(table)


def balls_isomorphic(B1: GraphBall, B2: GraphBall, respect_types: bool = False) -> dict | None:
    """A center-preserving isomorphism B1 -> B2 as {index: index}, or None.

    Deterministic: candidates are tried in B2's canonical order, so the first
    isomorphism in that order is returned.
    """
    if B1.radius != B2.radius:
        raise ValueError("balls must have equal radii")
    if len(B1) != len(B2) or len(B1.edges()) != len(B2.edges()):
        return None
    c1, c2 = _refine([B1, B2], respect_types)
    if sorted(c1) != sorted(c2):
        return None

    adj2 = [dict(nb) for nb in B2.adjacency]
    n = len(B1)
    # each non-center vertex has an earlier neighbour one step closer to the center
    anchor = []
    earlier = []
    for i in range(n):
        prev = [(j, t) for j, t in B1.adjacency[i] if j < i]
        earlier.append(prev)
        anchor.append(min((j for j, _ in prev), default=None))

    phi = [-1] * n
    used = [False] * n

    def candidates(i: int) -> list:
        if i == 0:
            return [0] if c1[0] == c2[0] else []
        base = phi[anchor[i]]
        return [j for j, _ in B2.adjacency[base] if not used[j] and c2[j] == c1[i]]

    def consistent(i: int, j: int) -> bool:
        nb = adj2[j]
        for k, t in earlier[i]:
            t2 = nb.get(phi[k], False)
            if t2 is False or (respect_types and t2 != t):
                return False
        mapped = sum(1 for k in nb if used[k])
        return mapped == len(earlier[i])

    stack = [iter(candidates(0))]
    i = 0
    while stack:
        it = stack[-1]
        placed = False
        for j in it:
            if consistent(i, j):
                phi[i] = j
                used[j] = True
                placed = True
                break
        if placed:
            i += 1
            if i == n:
                return {k: phi[k] for k in range(n)}
            stack.append(iter(candidates(i)))
        else:
            stack.pop()
            i -= 1
            if i >= 0:
                used[phi[i]] = False
                phi[i] = -1
    return None


def is_identity_map(B1: GraphBall, B2: GraphBall, respect_types: bool = True) -> bool:
    """Whether B1 and B2 have the same vertex set and the same (typed) edges."""
    if set(B1.vertices) != set(B2.vertices):
        return False
    e1 = {(frozenset((B1.vertices[i], B1.vertices[j])), t if respect_types else None)
          for i, j, t in B1.edges()}
    e2 = {(frozenset((B2.vertices[i], B2.vertices[j])), t if respect_types else None)
          for i, j, t in B2.edges()}
    return e1 == e2
