import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelattice import permgrp as pg
from treelattice.errors import ContainmentError, DomainError, MalformedPermutation, NotSemiregular

C3 = pg.from_images(3, [[1, 2, 0]])
S3 = pg.from_images(3, [[1, 2, 0], [1, 0, 2]])
KLEIN = pg.from_images(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
S4 = pg.symmetric_group(4)


def perms(d):
    return st.permutations(range(d)).map(tuple)


# closure


def test_closure_orders():
    assert C3.order == 3
    assert pg.from_images(3, []).order == 1
    assert S3.order == 6
    assert pg.from_images(4, [[1, 2, 3, 0], [0, 3, 2, 1]]).order == 8


def test_closure_errors():
    with pytest.raises(MalformedPermutation):
        pg.from_images(3, [[0, 0, 1]])
    with pytest.raises(MalformedPermutation):
        pg.from_images(3, [[0, 1]])
    with pytest.raises(DomainError):
        pg.from_images(1, [[0]])


@given(st.lists(perms(4), max_size=3))
def test_closure_idempotent_and_closed(gens):
    G = pg.from_images(4, gens)
    assert pg.from_images(4, G.elements) == G
    elems = set(G.elements)
    assert all(pg.compose(p, q) in elems for p in elems for q in elems)
    assert all(pg.inverse(p) in elems for p in elems)
    assert S4.order % G.order == 0


@given(perms(5), perms(5), perms(5))
def test_compose_associative_and_right_to_left(p, q, r):
    assert pg.compose(p, pg.compose(q, r)) == pg.compose(pg.compose(p, q), r)
    assert all(pg.compose(p, q)[x] == p[q[x]] for x in range(5))
    assert pg.compose(p, pg.inverse(p)) == pg.identity(5)


@given(perms(6))
def test_order_and_power(p):
    k = pg.order(p)
    assert pg.is_identity(pg.power(p, k))
    assert all(not pg.is_identity(pg.power(p, j)) for j in range(1, k))
    assert pg.power(p, -1) == pg.inverse(p)


def test_cycles():
    assert pg.from_cycles(4, (0, 1), (2, 3)) == (1, 0, 3, 2)
    assert pg.cycle_string((1, 2, 0)) == "(0 1 2)"
    assert pg.cycle_string((0, 1, 2)) == "()"


# classification


def test_classify_examples():
    c = pg.classify(C3)
    assert (c.transitive, c.semiregular, c.regular) == (True, True, True)
    c = pg.classify(pg.trivial_group(3))
    assert (c.transitive, c.semiregular) == (False, True)
    assert c.orbits == ((0,), (1,), (2,))
    c = pg.classify(S3)
    assert c.transitive and not c.semiregular


@given(st.lists(perms(4), max_size=3))
def test_classify_against_definitions(gens):
    G = pg.from_images(4, gens)
    c = pg.classify(G)
    semi = all(pg.is_identity(g) or all(g[x] != x for x in range(4)) for g in G.elements)
    trans = {g[0] for g in G.elements} == set(range(4))
    assert c.semiregular == semi
    assert c.transitive == trans
    assert c.regular == (semi and trans)
    assert sorted(x for o in c.orbits for x in o) == list(range(4))


def test_preserves_orbits():
    assert pg.preserves_orbits(C3, S3)
    assert not pg.preserves_orbits(pg.trivial_group(3), pg.from_images(3, [[1, 0, 2]]))
    assert pg.preserves_orbits(KLEIN, KLEIN)
    with pytest.raises(ContainmentError):
        pg.preserves_orbits(S3, C3)


def test_point_stabilizer():
    st0 = pg.point_stabilizer(S3, 0)
    assert set(st0.elements) == {(0, 1, 2), (0, 2, 1)}
    assert pg.point_stabilizer(C3, 0).order == 1
    assert pg.point_stabilizer(pg.trivial_group(3), 2).order == 1


# coset action


def test_coset_action_examples():
    ca = pg.coset_action(C3, S3)
    assert ca.n == 2
    assert ca((1, 0, 2)) == (1, 0)
    assert ca((1, 2, 0)) == (0, 1)
    assert pg.coset_action(C3, C3).n == 1
    assert pg.coset_action(KLEIN, S4).n == 6
    with pytest.raises(ContainmentError):
        pg.coset_action(S3, C3)


@pytest.mark.parametrize("F, Fp", [(C3, S3), (KLEIN, S4), (pg.cyclic_group(4),
                                   pg.from_images(4, [[1, 2, 3, 0], [0, 3, 2, 1]]))])
def test_coset_action_is_homomorphism(F, Fp):
    ca = pg.coset_action(F, Fp)
    assert ca.coset_reps[0] == pg.identity(F.degree)
    for s, t in itertools.product(Fp.elements, repeat=2):
        assert ca(pg.compose(s, t)) == pg.compose(ca(s), ca(t))
    # F is exactly the stabiliser of coset 0; alpha(F) fixes 0
    assert {s for s in Fp.elements if ca(s)[0] == 0} == set(F.elements)
    # brute-force coset membership: sigma rep_i lies in the coset with index alpha(sigma)(i)
    for s in Fp.elements:
        for i, r in enumerate(ca.coset_reps):
            j = ca(s)[i]
            assert pg.compose(pg.inverse(ca.coset_reps[j]), pg.compose(s, r)) in F


# mappers


def test_unique_mapper_examples():
    assert pg.unique_mapper(C3, 0, 2) == (2, 0, 1)
    assert pg.unique_mapper(C3, 1, 1) == (0, 1, 2)
    assert pg.unique_mapper(pg.from_images(4, [[1, 0, 3, 2]]), 0, 2) is None


@given(st.lists(perms(4), max_size=2), st.integers(0, 3), st.integers(0, 3))
def test_unique_mapper_iff_orbit(gens, b, t):
    G = pg.from_images(4, gens)
    if not pg.classify(G).semiregular:
        return
    m = pg.unique_mapper(G, b, t)
    in_orbit = any(g[b] == t for g in G.elements)
    assert (m is not None) == in_orbit
    if m is not None:
        assert m in G and m[b] == t


def test_mapper_table_needs_semiregular():
    with pytest.raises(NotSemiregular):
        pg.mapper_table(S3)
    table = pg.mapper_table(C3)
    assert len(table) == 9
    assert all(tau[c] == t for (c, t), tau in table.items())


# power condition


def brute(A, B):
    for b in B.elements:
        if pg.is_identity(b):
            continue
        if not any(pg.power(b, k) in A for k in range(1, pg.order(b))):
            return False
    return True


def test_power_condition_examples():
    C4 = pg.cyclic_group(4)
    assert pg.power_condition(pg.from_images(4, [[2, 3, 0, 1]]), C4)
    assert not pg.power_condition(pg.trivial_group(3), pg.from_images(3, [[1, 0, 2]]))
    assert not pg.power_condition(pg.point_stabilizer(S3, 0), S3)


@settings(max_examples=60)
@given(st.lists(perms(4), min_size=1, max_size=2), st.data())
def test_power_condition_matches_brute_force(gens, data):
    B = pg.from_images(4, gens)
    sub = data.draw(st.lists(st.sampled_from(B.elements), max_size=2))
    A = pg.from_images(4, sub)
    assert pg.power_condition(A, B) == brute(A, B)
