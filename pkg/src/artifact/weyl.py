"""Type D_l Weyl groups as signed permutations, parabolic subgroups,
lengths, Poincare polynomials and minimal double coset representatives.

A signed permutation is stored as the tuple of images of x_1..x_l: entry
k-1 equal to +j (resp. -j) means x_k -> x_j (resp. -x_j).  Composition is
(w*v)(x_k) = w(v(x_k)), so the substitution action on polynomials is a left
action.

Simple reflections are indexed by N = {-1, 1, ..., l-1}; index 0 is the
extra reflection s_0 (x_1 -> -x_1), which lies outside W and induces the
diagram automorphism gamma swapping the nodes -1 and 1.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from math import comb

from .qlaurent import LaurentPoly, ONE, ZERO

MAX_RANK = 5


class SignedPerm(tuple):
    """Images of x_1..x_l as signed indices (1-based)."""

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(int(v) for v in images)
        l = len(images)
        if sorted(abs(v) for v in images) != list(range(1, l + 1)):
            raise ValueError(f"not a signed permutation: {images}")
        return super().__new__(cls, images)

    @property
    def rank(self):
        return len(self)

    @classmethod
    def identity(cls, l):
        return cls(range(1, l + 1))

    def __mul__(self, other):
        # (self*other)(x_k) = self(other(x_k))
        if not isinstance(other, SignedPerm):
            return NotImplemented
        out = []
        for v in other:
            w = self[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return SignedPerm(out)

    def inverse(self):
        out = [0] * len(self)
        for k, v in enumerate(self, start=1):
            out[abs(v) - 1] = k if v > 0 else -k
        return SignedPerm(out)

    def num_negative(self):
        return sum(1 for v in self if v < 0)

    def in_type_d(self):
        return self.num_negative() % 2 == 0

    def is_identity(self):
        return all(v == k for k, v in enumerate(self, start=1))

    def __repr__(self):
        return f"SignedPerm({tuple(self)})"


def simple(i, l):
    """The simple reflection s_i, i in N or i = 0."""
    img = list(range(1, l + 1))
    if i == 0:
        img[0] = -1
    elif i == -1:
        if l < 2:
            raise ValueError("s_-1 needs l >= 2")
        img[0], img[1] = -2, -1
    elif 1 <= i <= l - 1:
        img[i - 1], img[i] = i + 1, i
    else:
        raise ValueError(f"no simple reflection {i} for l={l}")
    return SignedPerm(img)


def all_indices(l):
    """N = {-1, 1, ..., l-1}."""
    return (-1,) + tuple(range(1, l))


def gamma_index(i):
    return -i if abs(i) == 1 else i


def gamma_elt(w):
    """Conjugation by s_0."""
    s0 = simple(0, len(w))
    return s0 * w * s0


def d_elt(n, l):
    """d_n: x_k -> -x_{n+1-k} for k <= n, fixing x_k for k > n."""
    if not 0 <= n <= l:
        raise ValueError("need 0 <= n <= l")
    img = [-(n + 1 - k) for k in range(1, n + 1)] + list(range(n + 1, l + 1))
    return SignedPerm(img)


def s0_power_d(n, l):
    """s_0^n d_n, an element of W for every n."""
    d = d_elt(n, l)
    return simple(0, l) * d if n % 2 else d


def _root_negative(a_sign, a_idx, b_sign, b_idx):
    # Is a_sign*x_a + b_sign*x_b a negative root?  Positive roots x_j +- x_i, i<j.
    return (a_sign if a_idx > b_idx else b_sign) < 0


def length(w):
    """Number of positive roots of D_l sent to negative roots."""
    if not w.in_type_d():
        raise ValueError("length is only defined on type D elements")
    l = len(w)
    count = 0
    for i in range(l):
        wi = w[i]
        si, ai = (1 if wi > 0 else -1), abs(wi)
        for j in range(i + 1, l):
            wj = w[j]
            sj, aj = (1 if wj > 0 else -1), abs(wj)
            # w(x_j - x_i) and w(x_j + x_i)
            if _root_negative(sj, aj, -si, ai):
                count += 1
            if _root_negative(sj, aj, si, ai):
                count += 1
    return count


# ---------------------------------------------------------------- labels

def label(indices):
    return frozenset(indices)


def lab_O(l):
    return frozenset(range(2, l))


def lab_plus(I):
    return frozenset(I) | {1}


def lab_minus(I):
    return frozenset(I) | {-1}


def lab_pm(I):
    return frozenset(I) | {1, -1}


def lab_hat(I, n):
    return frozenset(I) - {n}


def gamma_label(I):
    return frozenset(gamma_index(i) for i in I)


def label_name(I, l):
    """Readable name such as 'O+', 'O^2-' or '{1,3}'."""
    I = frozenset(I)
    O = lab_O(l)
    for hat in [None] + list(range(2, l)):
        base = O if hat is None else lab_hat(O, hat)
        tag = "O" if hat is None else f"O^{hat}"
        for suffix, extra in (("", set()), ("+", {1}), ("-", {-1}), ("+-", {1, -1})):
            if I == base | extra:
                return tag + suffix
    return "{" + ",".join(str(i) for i in sorted(I)) + "}"


# ---------------------------------------------------------------- groups

class DGroup:
    """Eagerly enumerated W(D_l) with index tables."""

    def __init__(self, l):
        if not 2 <= l <= MAX_RANK:
            raise ValueError(f"rank {l} outside 2..{MAX_RANK}")
        self.l = l
        self.gens = {i: simple(i, l) for i in all_indices(l)}
        e = SignedPerm.identity(l)
        elts = [e]
        index = {e: 0}
        queue = deque([e])
        while queue:
            w = queue.popleft()
            for s in self.gens.values():
                v = s * w
                if v not in index:
                    index[v] = len(elts)
                    elts.append(v)
                    queue.append(v)
        self.elements = elts
        self.index = index
        self.lengths = [length(w) for w in elts]
        self.left = {i: [index[s * w] for w in elts] for i, s in self.gens.items()}
        self.right = {i: [index[w * s] for w in elts] for i, s in self.gens.items()}

    def __len__(self):
        return len(self.elements)

    def idx(self, w):
        return self.index[w]

    def length_of(self, w):
        return self.lengths[self.index[w]]

    def parabolic(self, I):
        return _parabolic(self.l, frozenset(I))

    def reduced_word(self, w):
        """Lexicographically smallest reduced word, order -1 < 1 < 2 < ..."""
        k = self.index[w]
        word = []
        order = sorted(self.gens)
        while self.lengths[k]:
            for i in order:
                j = self.left[i][k]
                if self.lengths[j] < self.lengths[k]:
                    word.append(i)
                    k = j
                    break
        return word

    def inverse_idx(self, k):
        return self.index[self.elements[k].inverse()]


@lru_cache(maxsize=None)
def group(l):
    return DGroup(l)


@lru_cache(maxsize=None)
def _parabolic(l, I):
    G = group(l)
    seen = {0}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        for i in I:
            j = G.left[i][k]
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return frozenset(seen)


def longest_and_poincare(I, l):
    """(w_I, pi_I, pi_I^+) with pi_I = sum q^{l(w_I)-2l(w)}, pi_I^+ = sum q^{2l(w)}."""
    G = group(l)
    sub = G.parabolic(I)
    top = max(sub, key=lambda k: G.lengths[k])
    L = G.lengths[top]
    pi = ZERO
    pip = ZERO
    for k in sub:
        pi = pi + LaurentPoly.monomial(L - 2 * G.lengths[k])
        pip = pip + LaurentPoly.monomial(2 * G.lengths[k])
    return G.elements[top], pi, pip


@lru_cache(maxsize=None)
def longest_length(I, l):
    G = group(l)
    return max(G.lengths[k] for k in G.parabolic(frozenset(I)))


@lru_cache(maxsize=None)
def poincare(I, l):
    return longest_and_poincare(frozenset(I), l)[1]


@lru_cache(maxsize=None)
def poincare_plus(I, l):
    return longest_and_poincare(frozenset(I), l)[2]


@lru_cache(maxsize=None)
def double_coset(I, k, J, l):
    """Indices of W_I w W_J for w = elements[k]."""
    G = group(l)
    out = set()
    for a in G.parabolic(I):
        wa = G.elements[a] * G.elements[k]
        for b in G.parabolic(J):
            out.add(G.index[wa * G.elements[b]])
    return frozenset(out)


@lru_cache(maxsize=None)
def _min_reps(I, J, l):
    G = group(l)
    remaining = set(range(len(G)))
    reps = []
    for k in sorted(range(len(G)), key=lambda k: (G.lengths[k], G.elements[k])):
        if k not in remaining:
            continue
        coset = double_coset(I, k, J, l)
        remaining -= coset
        reps.append(k)
    return tuple(reps)


def left_redundancy(I, d, J, l):
    """{i in I : s_i d = d s_j for some j in J}."""
    G = group(l)
    out = set()
    for i in I:
        sid = G.gens[i] * d
        if any(sid == d * G.gens[j] for j in J):
            out.add(i)
    return frozenset(out)


def min_double_cosets(I, J, l):
    """Minimal (W_I, W_J) double coset representatives with left redundancies."""
    if l > MAX_RANK:
        raise ValueError(f"brute force bound is l <= {MAX_RANK}")
    I, J = frozenset(I), frozenset(J)
    G = group(l)
    return [(G.elements[k], left_redundancy(I, G.elements[k], J, l))
            for k in _min_reps(I, J, l)]


def is_minimal(I, d, J, l):
    G = group(l)
    k = G.index[d]
    coset = double_coset(frozenset(I), k, frozenset(J), l)
    return all(G.lengths[j] >= G.lengths[k] for j in coset)


def coset_length_data(I, d, J, l):
    """l(IdJ) = l(w_I) - l(w_LR) + l(d) + l(w_J), the maximal length in W_I d W_J."""
    I, J = frozenset(I), frozenset(J)
    if not is_minimal(I, d, J, l):
        raise ValueError("d is not minimal in its double coset")
    LR = left_redundancy(I, d, J, l)
    return (longest_length(I, l) - longest_length(LR, l) + length(d)
            + longest_length(J, l))


def max_coset_element(I, d, J, l):
    """Longest element of W_I d W_J by enumeration."""
    G = group(l)
    coset = double_coset(frozenset(I), G.index[d], frozenset(J), l)
    return G.elements[max(coset, key=lambda k: G.lengths[k])]


# ---------------------------------------------------------------- closed forms

def _qfact_base(n, base2):
    from .qlaurent import qint
    out = ONE
    for k in range(1, n + 1):
        out = out * (qint(k).subs_q2() if base2 else qint(k))
    return out


def longest_lengths_and_poincare(l):
    """Closed-form (l(w_I), pi_I) for the standard parabolic labels.

    Keys are label names; hatted rows are included for 2 <= n <= l-1.
    """
    from .qlaurent import qint
    qf = lambda n: _qfact_base(n, False)
    qf2 = lambda n: _qfact_base(n, True)
    two = qint(2)
    O = lab_O(l)

    def typed(n):
        # D_n part: [2]^{n-1} [n-1]!_{q^2} [n]
        if n == 0:
            return ONE
        return two ** (n - 1) * qf2(n - 1) * qint(n)

    rows = {
        lab_pm(O): (2 * comb(l, 2), typed(l)),
        lab_plus(O): (comb(l, 2), qf(l)),
        lab_minus(O): (comb(l, 2), qf(l)),
        O: (comb(l - 1, 2), qf(l - 1)),
    }
    for n in range(2, l):
        H = lab_hat(O, n)
        rows[lab_pm(H)] = (comb(l - n, 2) + 2 * comb(n, 2), qf(l - n) * typed(n))
        rows[lab_plus(H)] = (comb(l - n, 2) + comb(n, 2), qf(l - n) * qf(n))
        rows[lab_minus(H)] = (comb(l - n, 2) + comb(n, 2), qf(l - n) * qf(n))
        rows[H] = (comb(l - n, 2) + comb(n - 1, 2), qf(l - n) * qf(n - 1))
    return rows
