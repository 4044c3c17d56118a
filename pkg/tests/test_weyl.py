from math import comb

from hypothesis import given, strategies as st

from artifact import weyl as W
from artifact.qlaurent import qint

ranks = st.integers(2, 4)


def _elements(l):
    return W.group(l).elements


@st.composite
def element(draw):
    l = draw(ranks)
    els = _elements(l)
    return els[draw(st.integers(0, len(els) - 1))]


def test_simple_reflection_action():
    assert tuple(W.simple(1, 3)) == (2, 1, 3)
    assert tuple(W.simple(0, 3)) == (-1, 2, 3)
    assert tuple(W.simple(-1, 3)) == (-2, -1, 3)


def test_length_values():
    assert W.length(W.SignedPerm.identity(3)) == 0
    assert W.length(W.simple(1, 3)) == 1
    for l in range(1, 6):
        for n in range(1, l + 1):
            assert W.length(W.s0_power_d(n, l)) == comb(n, 2)


def test_group_orders():
    for l in range(2, 6):
        assert len(W.group(l)) == 2 ** (l - 1) * [1, 1, 2, 6, 24, 120][l]


def test_longest_lengths_and_poincare_rank_three():
    O = W.lab_O(3)
    tab = W.longest_lengths_and_poincare(3)
    assert tab[W.lab_plus(O)] == (3, qint(1) * qint(2) * qint(3))
    q2 = lambda n: qint(n).subs_q2()
    assert tab[W.lab_pm(O)] == (6, qint(2) ** 2 * q2(1) * q2(2) * qint(3))


def test_longest_lengths_and_poincare_matches_enumeration():
    for l in range(2, 6):
        for I, (length, pi) in W.longest_lengths_and_poincare(l).items():
            w, p, _ = W.longest_and_poincare(I, l)
            assert W.length(w) == length
            assert p == pi


def test_minimal_double_cosets():
    O = W.lab_O(3)
    P, M = W.lab_plus(O), W.lab_minus(O)
    reps = W.min_double_cosets(O, P, 3)
    assert sorted(map(tuple, (d for d, _ in reps))) == \
        sorted(tuple(W.s0_power_d(n, 3)) for n in (1, 2, 3))
    redund = {tuple(d): LR for d, LR in reps}
    assert redund[tuple(W.s0_power_d(1, 3))] == O
    assert redund[tuple(W.s0_power_d(3, 3))] == O
    assert redund[tuple(W.s0_power_d(2, 3))] == W.lab_hat(O, 2)
    P4 = W.lab_plus(W.lab_O(4))
    assert sorted(map(tuple, (d for d, _ in W.min_double_cosets(P4, P4, 4)))) == \
        sorted(tuple(W.d_elt(n, 4)) for n in (0, 2, 4))
    assert sorted(map(tuple, (d for d, _ in W.min_double_cosets(M, P, 3)))) == \
        sorted(tuple(W.s0_power_d(n, 3)) for n in (1, 3))


def test_coset_length_matches_enumeration():
    for l in (3, 4):
        O = W.lab_O(l)
        for I in (O, W.lab_plus(O), W.lab_minus(O)):
            for J in (W.lab_plus(O), W.lab_hat(O, 2)):
                for d, _ in W.min_double_cosets(I, J, l):
                    assert W.coset_length_data(I, d, J, l) == W.length(W.max_coset_element(I, d, J, l))


@given(element())
def test_length_invariants(w):
    l = len(w)
    assert W.length(w) == W.length(w.inverse())
    for i in W.all_indices(l):
        assert abs(W.length(w * W.simple(i, l)) - W.length(w)) == 1
    word = W.group(l).reduced_word(w)
    assert len(word) == W.length(w)
    prod = W.SignedPerm.identity(l)
    for i in word:
        prod = prod * W.simple(i, l)
    assert prod == w


@given(element(), element())
def test_gamma_is_automorphism(a, b):
    if len(a) == len(b):
        assert W.gamma_elt(a * b) == W.gamma_elt(a) * W.gamma_elt(b)
        assert W.length(W.gamma_elt(a)) == W.length(a)
