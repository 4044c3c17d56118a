import sympy as sp
from hypothesis import given, settings, strategies as st

from artifact import iqmod as I
from artifact.qlaurent import LaurentPoly, ONE, ZERO, bar, qbinom, qint

import oracle

QINV = LaurentPoly.monomial(-1)


@st.composite
def vector(draw):
    l = draw(st.integers(0, 5))
    coords = [LaurentPoly(draw(st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=3)))
              for _ in range(l + 1)]
    return I.VlElt(l, coords)


def test_canonical_values():
    for l in range(4):
        assert I.icanonical(0, l) == I.eta(l)
    assert I.icanonical(2, 2) == I.VlElt(2, [QINV, ZERO, ONE])
    assert I.icanonical(3, 2).is_zero()


def test_canonical_matches_recursion_oracle():
    for l in range(7):
        vecs = oracle.canonical_vectors(l)
        for n in range(l + 1):
            got = [oracle.laurent_to_sympy(c) for c in I.icanonical_formula(n, l).coords]
            assert all(sp.expand(a - b) == 0 for a, b in zip(got, vecs[n]))


def test_b_action_values():
    assert I.b_act(I.eta(3)) == I.VlElt.std(1, 3)
    expect = I.VlElt(2, [QINV * qint(2), ZERO, qint(2)])
    assert I.b_act(I.VlElt.std(1, 2)) == expect


def test_b_action_on_canonical_basis():
    for l in range(7):
        t = l % 2
        for n in range(l + 1):
            lhs = I.b_act(I.icanonical(n, l))
            rhs = I.icanonical(n + 1, l).scale(qint(n + 1))
            if n % 2 == t and n > 0:
                rhs = rhs + I.icanonical(n - 1, l).scale(qint(n))
            assert lhs == rhs


def test_monomial_expansion_values():
    assert I.monomial_expand_ui(0, 0) == (ONE,)
    assert I.monomial_expand_ui(2, 1) == (ONE, ZERO, qint(2))
    assert I.monomial_expand_ui(2, 0) == (ZERO, ZERO, qint(2))


def test_monomial_expansion_matches_oracle():
    for n in range(9):
        for t in (0, 1):
            got = [oracle.laurent_to_sympy(c) for c in I.monomial_expand_ui(n, t)]
            want = oracle.monomial_coefficients(n, t)
            assert all(sp.expand(a - b) == 0 for a, b in zip(got, want))


def test_partition_formula_matches_expansion():
    for l in range(7):
        for n in range(9):
            assert I.partition_expand(n, l) == I.monomial_expand(n, l)


def test_form_values():
    for l in range(6):
        assert I.bilinear_form_l(I.eta(l), I.eta(l)) == ONE
    v = I.VlElt.std(1, 2)
    assert I.bilinear_form_l(v, v) == QINV * qint(2)


def test_form_against_even_canonical_vectors():
    for l in range(7):
        t = l % 2
        for n in range(l // 2 + 1):
            val = I.bilinear_form_l(I.eta(l), I.icanonical(2 * n, l))
            assert val == LaurentPoly.monomial(-n * (l + t - 1)) * qbinom((l - t) // 2, n, "q2")


def test_transition_matrix_is_unitriangular():
    for l in range(7):
        M = I.transition_matrix(l)
        for n in range(l + 1):
            assert M[n][n] == ONE
            assert all(not M[n][m] for m in range(n + 1, l + 1))


def test_rank_one_b_squares_to_one():
    assert I.b_act(I.b_act(I.eta(1))) == I.eta(1)


@settings(max_examples=40, deadline=None)
@given(vector())
def test_ibar_is_involution_fixing_canonical_basis(v):
    assert I.ibar(I.ibar(v)) == v
    for n in range(v.l + 1):
        assert I.ibar(I.icanonical(n, v.l)) == I.icanonical(n, v.l)


@settings(max_examples=40, deadline=None)
@given(vector())
def test_ibar_commutes_with_b(v):
    assert I.ibar(I.b_act(v)) == I.b_act(I.ibar(v))


@settings(max_examples=40, deadline=None)
@given(vector(), st.integers(-3, 3))
def test_ibar_is_antilinear(v, e):
    c = LaurentPoly.monomial(e) + ONE
    assert I.ibar(v.scale(c)) == I.ibar(v).scale(bar(c))
