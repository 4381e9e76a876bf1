import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelattice import tree
from treelattice.elements import IDENTITY, Generator, random_word, reference_instance
from treelattice.errors import RadiusError
from treelattice.graphs.spaces import ZERO, LampConfig, XVertex, x_neighbors
from treelattice.tree import ROOT, EdgeRef
from treelattice.wreath import (
    GammaElement,
    GammaGroup,
    WreathTruncation,
    embed,
    format_gamma_word,
    gamma_from_json,
    gamma_to_json,
    identity_truncation,
    parse_gamma_word,
    rho,
    support_bound,
    truncation_to_json,
    wreath_act,
    wreath_mul,
)

A = reference_instance("A")
B = reference_instance("B")
SWAP = (0, 2, 1)
ROT = (1, 2, 0)


# rho and embed


def test_rho_examples():
    assert rho(A, Generator(0, SWAP), ROOT) == (1, 0)
    assert all(rho(A, IDENTITY, v) == (0, 1) for v in tree.ball(3, ROOT, 2))
    assert all(rho(A, Generator(0, ROT), v) == (0, 1) for v in tree.ball(3, ROOT, 3))


@pytest.mark.parametrize("inst", [A, B])
def test_rho_direct_formula(inst):
    # rho_{g,v} = alpha(sigma(g, g^-1 v)), computed the slow way
    rng = random.Random(7)
    for _ in range(20):
        g = random_word(inst, rng.randint(0, 5), rng)
        g_inv = inst.invert(g)
        for v in tree.ball(inst.d, ROOT, 3):
            direct = inst.alpha(inst.local_perm(g, inst.apply(g_inv, v)))
            assert rho(inst, g, v) == direct


def test_embed_examples():
    t = embed(A, IDENTITY)
    assert t.assignments == {} and t.gamma == IDENTITY
    t = embed(A, Generator(0, SWAP), R=3)
    assert t.moves_zero() == [ROOT]
    assert embed(A, Generator(0, ROT), R=3).moves_zero() == []


def test_embed_radius_error():
    g = Generator(1, SWAP)  # deviates at the pivot (0,)
    with pytest.raises(RadiusError) as exc:
        embed(A, g, R=0)
    assert exc.value.required == 1
    assert support_bound(A, g) == 1
    t = embed(A, g, R=1)
    with pytest.raises(RadiusError):
        t.value((1, 2))


@pytest.mark.parametrize("inst", [A, B])
def test_embed_matches_pointwise_rho(inst):
    rng = random.Random(3)
    ball = tree.ball(inst.d, ROOT, 4)
    for _ in range(15):
        g = random_word(inst, rng.randint(0, 5), rng)
        t = embed(inst, g, domain=ball)
        assert all(t.value(v) == rho(inst, g, v) for v in ball)


def test_wreath_mul_identity_and_inverse():
    rng = random.Random(5)
    R = 4
    ball = tree.ball(3, ROOT, R)
    ident = identity_truncation(2, ball)
    for _ in range(20):
        g = random_word(A, rng.randint(0, 5), rng)
        g_inv = A.invert(g)
        eg = embed(A, g, domain=ball)
        prod = wreath_mul(A, ident, eg, R=R)
        assert all(prod.value(v) == eg.value(v) for v in ball)
        pulled = [A.apply(g_inv, v) for v in ball]
        pair = wreath_mul(A, eg, embed(A, g_inv, domain=pulled), R=R)
        assert pair.assignments == {}
        assert A.is_identity(pair.gamma)


def test_wreath_mul_needs_domain():
    g = Generator(1, ROT)
    eg = embed(A, g, R=1)
    eh = embed(A, g, R=1)
    with pytest.raises(RadiusError):
        wreath_mul(A, eg, eh, R=1)


def test_wreath_act_examples():
    x0 = XVertex(ZERO, A.base_edge)
    assert wreath_act(A, identity_truncation(2, [ROOT]), x0) == x0
    # a pure lamp assignment {e -> swap}
    t = WreathTruncation(2, {ROOT: (1, 0)}, frozenset([ROOT]), IDENTITY, True)
    assert wreath_act(A, t, x0) == XVertex(LampConfig({ROOT: 1}), A.base_edge)


def test_wreath_act_requires_complete():
    t = WreathTruncation(2, {}, frozenset([ROOT]), Generator(1, SWAP), False)
    with pytest.raises(RadiusError):
        wreath_act(A, t, XVertex(ZERO, A.base_edge))


def test_truncation_json():
    obj = truncation_to_json(A, embed(A, Generator(1, SWAP), R=1))
    assert obj["assignments"] == [{"vertex": "0", "perm": [1, 0]}]


# Gamma_{n,d}


def test_gamma_generators():
    G = GammaGroup(2, 3)
    gens = G.generators()
    assert len(gens) == 6
    assert [G.generator_type(s) for s in gens].count(2) == 2
    assert len(GammaGroup(3, 4).generators()) == 2 * 2 + 2 * 3


def test_gamma_examples():
    G = GammaGroup(2, 3)
    u0 = GammaElement(ZERO, ((0, 1),))
    assert G.word_apply(u0.word, (0,)) == (1,)
    x0 = XVertex(ZERO, EdgeRef(ROOT, 0))
    lamp = GammaElement(LampConfig({ROOT: 1}), ())
    assert G.act(lamp, x0) == XVertex(LampConfig({ROOT: 1}), x0.edge)


def gamma_elements(G, max_len=6):
    return st.lists(st.sampled_from(G.generators()), max_size=max_len)


G23 = GammaGroup(2, 3)


def gamma_product(G, gens):
    x = G.identity
    for s in gens:
        x = G.mul(x, s)
    return x


@settings(max_examples=50)
@given(gamma_elements(G23), gamma_elements(G23))
def test_gamma_group_laws(xs, ys):
    G = G23
    x, y = gamma_product(G, xs), gamma_product(G, ys)
    assert G.mul(x, G.inverse(x)) == G.identity
    assert G.mul(G.inverse(x), x) == G.identity
    # action is a left action on X-vertices
    pt = G.orbit_point(y)
    assert G.act(G.mul(x, y), G.orbit_point(G.identity)) == G.act(x, pt)


@settings(max_examples=50)
@given(gamma_elements(G23, 4))
def test_gamma_generators_move_to_neighbours(xs):
    G = G23
    x = gamma_product(G, xs)
    p = G.orbit_point(x)
    nbrs = {y for y, _ in x_neighbors(2, 3, p)}
    for s in G.generators():
        assert G.orbit_point(G.mul(x, s)) in nbrs


def test_gamma_serialization():
    G = GammaGroup(3, 3)
    x = GammaElement(LampConfig({ROOT: 2, (1,): 1}), ((0, 2), (1, 1)))
    assert gamma_from_json(G, gamma_to_json(x)) == x
    assert parse_gamma_word(format_gamma_word(x.word)) == x.word
    assert format_gamma_word(()) == "1"


def test_gamma_word_normal_form():
    G = GammaGroup(2, 3)
    assert G.word_mul(((0, 1),), ((0, 2),)) == ()
    assert G.word_mul(((0, 1),), ((0, 1),)) == ((0, 2),)
    assert G.word_mul((), ((1, 3),)) == ()
