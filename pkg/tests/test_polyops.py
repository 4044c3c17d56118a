import random

import sympy as sp
from hypothesis import given, settings, strategies as st

from artifact import polyops as P
from artifact import weyl as W

import oracle


@st.composite
def poly(draw, l):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, 3)] * l), st.integers(-5, 5), max_size=5))
    return P.MultiPoly(l, terms)


@st.composite
def rank_and_polys(draw, count=2):
    l = draw(st.integers(2, 4))
    return (l,) + tuple(draw(poly(l)) for _ in range(count))


def test_action_values():
    assert P.act(W.simple(1, 2), P.x(2, 1)) == P.x(2, 2)
    assert P.act(W.simple(0, 2), P.x(2, 1)) == -P.x(2, 1)
    assert P.act(W.simple(-1, 2), P.x(2, 1)) == -P.x(2, 2)


def test_demazure_values():
    assert P.demazure(1, P.x(2, 2)) == 1
    assert P.demazure(1, P.x(2, 1) * P.x(2, 2)).is_zero()
    # with alpha_{-1} = x_2 + x_1: (x_1 - (-x_2)) / (x_2 + x_1) = 1
    assert P.demazure(-1, P.x(2, 1)) == 1


def test_demazure_matches_substitution_oracle():
    rng = random.Random(7)
    for l in (2, 3, 4):
        for _ in range(5):
            f = P.random_poly(l, rng, max_deg=4)
            for i in W.all_indices(l):
                got = oracle.multipoly_to_sympy(P.demazure(i, f))
                assert sp.expand(got - oracle.demazure(i, oracle.multipoly_to_sympy(f), l)) == 0


def test_canonical_word_is_reduced_and_correct():
    O = W.lab_O(3)
    word = P.canonical_word(W.lab_plus(O), O, 3)
    assert len(word) == 2
    wI = W.longest_and_poincare(W.lab_plus(O), 3)[0]
    wJ = W.longest_and_poincare(O, 3)[0]
    prod = W.SignedPerm.identity(3)
    for i in word:
        prod = prod * W.simple(i, 3)
    assert prod == wI * wJ


def test_top_power_traces_to_sign():
    for l in range(2, 6):
        O = W.lab_O(l)
        word = P.canonical_word(W.lab_plus(O), O, l)
        assert P.demazure_word(word, (-P.x(l, 1)) ** (l - 1)) == 1


def test_root_products():
    l = 3
    O = W.lab_O(l)
    x1, x2, x3 = (P.x(l, i) for i in (1, 2, 3))
    assert P.mu(W.lab_plus(O), l) == (x2 - x1) * (x3 - x1) * (x3 - x2)
    assert P.eta(W.lab_plus(O), O, l) == (x2 - x1) * (x3 - x1)
    for l in (3, 4):
        O = W.lab_O(l)
        M = W.lab_minus(O)
        for n in range(2, l):
            expect = P.one(l)
            for k in range(n + 1, l + 1):
                expect = expect * (P.x(l, k) + P.x(l, 1))
            assert P.eta(M, W.lab_hat(O, n), l) == expect


@settings(max_examples=40, deadline=None)
@given(rank_and_polys(1))
def test_demazure_squares_to_zero(data):
    l, f = data
    for i in W.all_indices(l):
        assert P.demazure(i, P.demazure(i, f)).is_zero()
        g = P.demazure(i, f)
        assert P.act(W.simple(i, l), g) == g


@settings(max_examples=40, deadline=None)
@given(rank_and_polys(2))
def test_twisted_leibniz_rule(data):
    l, f, g = data
    for i in W.all_indices(l):
        lhs = P.demazure(i, f * g)
        rhs = P.demazure(i, f) * g + P.act(W.simple(i, l), f) * P.demazure(i, g)
        assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(rank_and_polys(1))
def test_braid_relations(data):
    l, f = data
    D = P.demazure_word
    for i in range(1, l - 1):
        assert D((i, i + 1, i), f) == D((i + 1, i, i + 1), f)
    if l >= 3:
        assert D((-1, 2, -1), f) == D((2, -1, 2), f)
    assert D((-1, 1), f) == D((1, -1), f)


@settings(max_examples=40, deadline=None)
@given(rank_and_polys(2))
def test_ring_axioms(data):
    l, f, g = data
    assert f * g == g * f
    assert (f + g) * (f - g) == f * f - g * g
    assert P.divide_exact(f * g, g) == f if g else True
