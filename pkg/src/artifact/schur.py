"""The Hecke algebra of W(D_l), the q-Schur algebroid S, its extension
S + s_0 S by the diagram automorphism, and the element b acting on V.

Conventions: h_s^2 = 1 + (q^{-1} - q) h_s, so that h_s b_{w_I} = q^{-1} b_{w_I}
for s in I, with b_{w_I} = sum_{w in W_I} q^{l(w_I) - l(w)} h_w.
"""

from __future__ import annotations

from functools import lru_cache

from . import iqmod, weyl
from .qlaurent import LaurentPoly, ONE, ZERO, bar as lbar

QINV_MINUS_Q = LaurentPoly({-1: 1, 1: -1})
Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})
MAX_HECKE_RANK = 4


def _add_into(d, k, c):
    v = d.get(k)
    v = c if v is None else v + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


class HeckeElt:
    """Finitely supported map from group indices of W(D_l) to Laurent polynomials."""

    __slots__ = ("l", "c")

    def __init__(self, l, coeffs=None):
        self.l = l
        self.c = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, l, w):
        G = weyl.group(l)
        return cls(l, {G.idx(w): ONE})

    @classmethod
    def one(cls, l):
        return cls(l, {0: ONE})

    def __eq__(self, other):
        return isinstance(other, HeckeElt) and self.l == other.l and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            _add_into(out, k, v)
        return HeckeElt(self.l, out)

    def __neg__(self):
        return HeckeElt(self.l, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        return HeckeElt(self.l, {k: v * p for k, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_multiply(self, other)
        return self.scale(other)

    def coeff(self, w):
        return self.c.get(weyl.group(self.l).idx(w), ZERO)

    def items(self):
        G = weyl.group(self.l)
        return [(G.elements[k], v) for k, v in sorted(self.c.items())]

    def exact_div(self, p):
        return HeckeElt(self.l, {k: v.exact_div(p) for k, v in self.c.items()})

    def __repr__(self):
        return "HeckeElt(" + " + ".join(f"({v})h{tuple(w)}" for w, v in self.items()) + ")"


def left_mul_gen(i, h):
    G = weyl.group(h.l)
    table, lens = G.left[i], G.lengths
    out = {}
    for k, v in h.c.items():
        j = table[k]
        _add_into(out, j, v)
        if lens[j] < lens[k]:
            _add_into(out, k, v * QINV_MINUS_Q)
    return HeckeElt(h.l, out)


def right_mul_gen(h, i):
    G = weyl.group(h.l)
    table, lens = G.right[i], G.lengths
    out = {}
    for k, v in h.c.items():
        j = table[k]
        _add_into(out, j, v)
        if lens[j] < lens[k]:
            _add_into(out, k, v * QINV_MINUS_Q)
    return HeckeElt(h.l, out)


def hecke_multiply(a, b):
    """Product in the Hecke algebra; h_x b is built along reduced words of x."""
    if a.l != b.l:
        raise ValueError("rank mismatch")
    if a.l > MAX_HECKE_RANK:
        raise ValueError(f"Hecke products are limited to l <= {MAX_HECKE_RANK}")
    G = weyl.group(a.l)
    memo = {0: b}

    def hx(k):
        if k in memo:
            return memo[k]
        word = G.reduced_word(G.elements[k])
        # h_x = h_{s} h_{s x}
        s = word[0]
        out = left_mul_gen(s, hx(G.left[s][k]))
        memo[k] = out
        return out

    out = {}
    for k in sorted(a.c, key=lambda k: G.lengths[k]):
        coef = a.c[k]
        for j, v in hx(k).c.items():
            _add_into(out, j, coef * v)
    return HeckeElt(a.l, out)


@lru_cache(maxsize=None)
def _bar_basis(l, k):
    G = weyl.group(l)
    if k == 0:
        return HeckeElt.one(l)
    s = G.reduced_word(G.elements[k])[0]
    rest = _bar_basis(l, G.left[s][k])
    # bar(h_s) = h_s^{-1} = h_s + (q - q^{-1})
    return left_mul_gen(s, rest) + rest.scale(Q_MINUS_QINV)


def hecke_bar(h):
    out = HeckeElt(h.l)
    for k, v in h.c.items():
        out = out + _bar_basis(h.l, k).scale(lbar(v))
    return out


def hecke_rho(h):
    """Anti-involution h_w -> h_{w^{-1}}."""
    G = weyl.group(h.l)
    return HeckeElt(h.l, {G.inverse_idx(k): v for k, v in h.c.items()})


def hecke_gamma(h):
    """h_w -> h_{s_0 w s_0}."""
    G = weyl.group(h.l)
    return HeckeElt(h.l, {G.idx(weyl.gamma_elt(G.elements[k])): v for k, v in h.c.items()})


def hecke_trace(h):
    return h.c.get(0, ZERO)


def hecke_omega(h):
    return hecke_rho(hecke_bar(h))


# ---------------------------------------------------------------- cosets

def b_longest(I, l):
    """b_{w_I} = sum_{w in W_I} q^{l(w_I) - l(w)} h_w."""
    return std_coset_hecke(frozenset(I), weyl.SignedPerm.identity(l), frozenset(I), l)


@lru_cache(maxsize=None)
def _std_coset(I, k, J, l):
    G = weyl.group(l)
    d = G.elements[k]
    top = weyl.coset_length_data(I, d, J, l)
    coset = weyl.double_coset(I, k, J, l)
    return HeckeElt(l, {j: LaurentPoly.monomial(top - G.lengths[j]) for j in coset})


def std_coset_hecke(I, d, J, l):
    """h_{IdJ} = sum_{w in W_I d W_J} q^{l(IdJ) - l(w)} h_w."""
    return _std_coset(frozenset(I), weyl.group(l).idx(d), frozenset(J), l)


def left_divisible(h, I):
    return all(left_mul_gen(i, h) == h.scale(LaurentPoly.monomial(-1)) for i in I)


def right_divisible(h, J):
    return all(right_mul_gen(h, j) == h.scale(LaurentPoly.monomial(-1)) for j in J)


# ---------------------------------------------------------------- Schur algebroid

class SchurElt:
    """Blocks (I, J, twisted) -> HeckeElt y in 1_I S 1_J.

    A twisted block stands for s_0 y, which lies in 1_{gamma I}(S + s_0 S)1_J.
    """

    __slots__ = ("l", "blocks")

    def __init__(self, l, blocks=None, check=False):
        self.l = l
        self.blocks = {}
        for key, h in (blocks or {}).items():
            I, J, tw = key
            key = (frozenset(I), frozenset(J), bool(tw))
            if h:
                if check and not (left_divisible(h, key[0]) and right_divisible(h, key[1])):
                    raise ArithmeticError("block not divisible by b_{w_I} and b_{w_J}")
                self.blocks[key] = self.blocks[key] + h if key in self.blocks else h
        self.blocks = {k: v for k, v in self.blocks.items() if v}

    def __eq__(self, other):
        return isinstance(other, SchurElt) and self.blocks == other.blocks

    def __bool__(self):
        return bool(self.blocks)

    def __add__(self, other):
        out = dict(self.blocks)
        for k, v in other.blocks.items():
            out[k] = out[k] + v if k in out else v
        return SchurElt(self.l, out)

    def __neg__(self):
        return SchurElt(self.l, {k: -v for k, v in self.blocks.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        return SchurElt(self.l, {k: v.scale(p) for k, v in self.blocks.items()})

    def outer_left(self, key):
        I, _, tw = key
        return weyl.gamma_label(I) if tw else I

    def __repr__(self):
        parts = []
        for (I, J, tw), h in self.blocks.items():
            tag = f"{'s0*' if tw else ''}[{weyl.label_name(I, self.l)},{weyl.label_name(J, self.l)}]"
            parts.append(f"{tag}{h}")
        return "SchurElt(" + " + ".join(parts) + ")"


def identity(I, l):
    I = frozenset(I)
    return SchurElt(l, {(I, I, False): b_longest(I, l)})


def standard_basis_elt(I, d, J, twisted, l):
    if not weyl.is_minimal(I, d, J, l):
        raise ValueError("d is not minimal in its double coset")
    return SchurElt(l, {(I, J, twisted): std_coset_hecke(I, d, J, l)})


def b_IJ(I, J, l):
    """b_{I,J} = h_{I1J}."""
    return standard_basis_elt(frozenset(I), weyl.SignedPerm.identity(l), frozenset(J), False, l)


def _compose_plain(x, y, J, l):
    return hecke_multiply(x, y).exact_div(weyl.poincare(J, l))


def schur_compose(x, y):
    """Composition x o y = xy / pi_J with the twist rule for s_0."""
    l = x.l
    out = {}

    def put(key, h):
        if h:
            out[key] = out[key] + h if key in out else h

    for (I, J, tx), hx in x.blocks.items():
        for (J2, K, ty), hy in y.blocks.items():
            outer_y = weyl.gamma_label(J2) if ty else J2
            if outer_y != J:
                continue
            if not tx and not ty:
                put((I, K, False), _compose_plain(hx, hy, J, l))
            elif tx and not ty:
                put((I, K, True), _compose_plain(hx, hy, J, l))
            elif not tx and ty:
                # x o s_0 v = s_0 gamma(x) o v
                put((weyl.gamma_label(I), K, True),
                    _compose_plain(hecke_gamma(hx), hy, J2, l))
            else:
                # s_0 y o s_0 v = gamma(y) o v
                put((weyl.gamma_label(I), K, False),
                    _compose_plain(hecke_gamma(hx), hy, J2, l))
    return SchurElt(l, out)


def schur_bar(x):
    return SchurElt(x.l, {k: hecke_bar(h) for k, h in x.blocks.items()})


def schur_rho(x):
    out = {}
    for (I, J, tw), h in x.blocks.items():
        if tw:
            out[(weyl.gamma_label(J), weyl.gamma_label(I), True)] = hecke_gamma(hecke_rho(h))
        else:
            out[(J, I, False)] = hecke_rho(h)
    return SchurElt(x.l, out)


def bilinear_form(x, y):
    """(x, y) = tr(rho(x) y)/pi_I blockwise; twisted pairs with twisted."""
    total = ZERO
    for key, hx in x.blocks.items():
        hy = y.blocks.get(key)
        if hy is None:
            continue
        s = ZERO
        for k, v in hx.c.items():
            w = hy.c.get(k)
            if w is not None:
                s = s + v * w
        outer = weyl.gamma_label(key[0]) if key[2] else key[0]
        total = total + s.exact_div(weyl.poincare(outer, x.l))
    return total


# ---------------------------------------------------------------- V and b

def _labels(l):
    O = weyl.lab_O(l)
    return O, weyl.lab_plus(O), weyl.lab_minus(O)


def V_standard(n, l):
    """H_n: h_{(O+)d_n(O+)} for n even, s_0 h_{(O-)s_0 d_n(O+)} for n odd."""
    O, P, M = _labels(l)
    if n % 2 == 0:
        return standard_basis_elt(P, weyl.d_elt(n, l), P, False, l)
    return standard_basis_elt(M, weyl.s0_power_d(n, l), P, True, l)


def b_element(l):
    """b = s_0 b_{O-,O+}."""
    O, P, M = _labels(l)
    return SchurElt(l, {(M, P, True): std_coset_hecke(M, weyl.SignedPerm.identity(l), P, l)})


def kl_coset_elt(n, l):
    """The canonical basis element of V indexed by n, transported from V(l).

    Equals sum_m bar(c_{nm}) H_m where b^(n) eta = sum_m c_{nm} f^(m) eta.
    """
    coords = iqmod.icanonical(n, l).coords
    out = SchurElt(l)
    for m, c in enumerate(coords):
        if c:
            out = out + V_standard(m, l).scale(lbar(c))
    return out


def kl_coset_elt_for(I, d, J, twisted, l):
    """b_{IdJ} for the cosets appearing in V."""
    O, P, M = _labels(l)
    for n in range(l + 1):
        if n % 2 == 0 and not twisted and (frozenset(I), frozenset(J)) == (P, P) \
                and d == weyl.d_elt(n, l):
            return kl_coset_elt(n, l)
        if n % 2 == 1 and twisted and (frozenset(I), frozenset(J)) == (M, P) \
                and d == weyl.s0_power_d(n, l):
            return kl_coset_elt(n, l)
    raise ValueError("only cosets appearing in V are supported")


def b_power_hecke(n, l):
    """b^{o n} by repeated composition in S + s_0 S."""
    O, P, M = _labels(l)
    out = identity(P, l)
    b = b_element(l)
    for _ in range(n):
        out = schur_compose(b, out)
    return out


def b_power_transport(n, l):
    """b^{o n} from the monomial expansion in V(l) and the canonical elements."""
    coeffs = iqmod.monomial_expand(n, l)
    out = SchurElt(l)
    for m, c in enumerate(coeffs):
        if c and m <= l:
            out = out + kl_coset_elt(m, l).scale(c)
    return out


def b_power(n, l):
    """b^{o n}; the Hecke computation and the V(l) transport must agree."""
    via_v = b_power_transport(n, l)
    if l <= MAX_HECKE_RANK:
        direct = b_power_hecke(n, l)
        if direct != via_v:
            raise ArithmeticError(f"b^{n} disagrees between Hecke and V({l}) models")
    return via_v


def transition_matrix_std_to_kl(l):
    """Rows: canonical elements; columns: coefficients on H_m."""
    return [[lbar(c) for c in iqmod.icanonical(n, l).coords] for n in range(l + 1)]


def gram_matrix_standard(l):
    return [[bilinear_form(V_standard(n, l), V_standard(m, l)) for m in range(l + 1)]
            for n in range(l + 1)]


def kl_coordinates(x, l):
    """Coefficients c_m with x = sum_m c_m * (canonical element m), for x in V."""
    rem = x
    out = [ZERO] * (l + 1)
    for m in range(l, -1, -1):
        (key, hm), = V_standard(m, l).blocks.items()
        block = rem.blocks.get(key)
        if block is None:
            continue
        k0 = min(hm.c)
        c = block.c.get(k0, ZERO)
        if not c:
            continue
        coef = c.exact_div(hm.c[k0])
        out[m] = coef
        rem = rem - kl_coset_elt(m, l).scale(coef)
    if rem:
        raise ArithmeticError("element does not lie in the span of the canonical elements")
    return out
