"""Polynomials in x_1..x_l over Q with the signed-permutation action,
Demazure operators and the root products mu_I, eta^J_I.

Simple roots: alpha_{-1} = x_2 + x_1 and alpha_i = x_{i+1} - x_i.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from . import weyl


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class MultiPoly:
    """Sparse polynomial: exponent tuple -> nonzero int or Fraction."""

    __slots__ = ("l", "terms")

    def __init__(self, l, terms=None):
        self.l = l
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[tuple(e)] = _norm(c)
        self.terms = t

    @classmethod
    def _raw(cls, l, terms):
        p = cls.__new__(cls)
        p.l = l
        p.terms = terms
        return p

    # constructors
    @classmethod
    def const(cls, l, c):
        return cls(l, {(0,) * l: c})

    @classmethod
    def var(cls, l, i):
        e = [0] * l
        e[i - 1] = 1
        return cls(l, {tuple(e): 1})

    @classmethod
    def monomial(cls, l, exps, c=1):
        return cls(l, {tuple(exps): c})

    # basics
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(self.l, other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(self.l, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = _norm(v)
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.l, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.l, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        if not c:
            return MultiPoly._raw(self.l, {})
        return MultiPoly._raw(self.l, {e: _norm(v * c) for e, v in self.terms.items()})

    def _integral(self):
        """(integer terms, denominator) with self = terms / denominator."""
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        if den == 1:
            return self.terms, 1
        return {e: int(c * den) for e, c in self.terms.items()}, den

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        # multiply over a common denominator so the inner loop stays in ints
        t1, d1 = self._integral()
        t2, d2 = other._integral()
        t = {}
        for e1, c1 in t1.items():
            for e2, c2 in t2.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        den = d1 * d2
        if den == 1:
            return MultiPoly._raw(self.l, {e: c for e, c in t.items() if c})
        out = {}
        for e, c in t.items():
            if c:
                out[e] = c // den if c % den == 0 else Fraction(c, den)
        return MultiPoly._raw(self.l, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MultiPoly.const(self.l, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    # grading (deg x_i = 2)
    def degree(self):
        if not self.terms:
            return None
        return max(2 * sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, deg):
        return MultiPoly._raw(self.l, {e: c for e, c in self.terms.items() if 2 * sum(e) == deg})

    def constant_term(self):
        return self.terms.get((0,) * self.l, 0)

    def leading(self):
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "*".join(f"x{i+1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = to_str

    def to_json(self):
        return [[list(e), str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, l, data):
        return cls(l, {tuple(e): Fraction(c) for e, c in data})


def const(l, c):
    return MultiPoly.const(l, c)


def x(l, i):
    return MultiPoly.var(l, i)


def zero(l):
    return MultiPoly(l)


def one(l):
    return MultiPoly.const(l, 1)


def elementary(r, variables, l):
    """e_r in the given variables (1-based indices)."""
    if r < 0 or r > len(variables):
        return zero(l)
    t = {}
    for S in combinations(variables, r):
        e = [0] * l
        for i in S:
            e[i - 1] = 1
        t[tuple(e)] = 1
    return MultiPoly(l, t)


def complete(r, variables, l):
    """h_r in the given variables."""
    if r < 0:
        return zero(l)
    out = {}

    def rec(idx, left, e):
        if idx == len(variables) - 1:
            e2 = list(e)
            e2[variables[idx] - 1] += left
            out[tuple(e2)] = 1
            return
        for k in range(left + 1):
            e2 = list(e)
            e2[variables[idx] - 1] += k
            rec(idx + 1, left - k, e2)

    if not variables:
        return one(l) if r == 0 else zero(l)
    rec(0, r, [0] * l)
    return MultiPoly(l, out)


def root(i, l):
    if i == -1:
        return x(l, 2) + x(l, 1)
    return x(l, i + 1) - x(l, i)


# ---------------------------------------------------------------- action

def act(w, f):
    """Substitution x_k -> w(x_k)."""
    t = {}
    for e, c in f.terms.items():
        new = [0] * f.l
        sign = 1
        for k, a in enumerate(e):
            if a:
                v = w[k]
                new[abs(v) - 1] += a
                if v < 0 and a & 1:
                    sign = -sign
        new = tuple(new)
        t[new] = t.get(new, 0) + sign * c
    return MultiPoly(f.l, t)


def gamma(f):
    """The graph automorphism: x_1 -> -x_1."""
    return MultiPoly._raw(f.l, {e: (-c if e[0] & 1 else c) for e, c in f.terms.items()})


def is_invariant(f, I):
    return all(act(weyl.simple(i, f.l), f) == f for i in I)


# ---------------------------------------------------------------- Demazure

def _typea_terms(a, b):
    """(u^a v^b - u^b v^a)/(v - u) as a list of ((p, r), coeff) in u, v."""
    if a == b:
        return []
    if a > b:
        d, m, sign = a - b, b, -1
    else:
        d, m, sign = b - a, a, 1
    return [((m + k, m + d - 1 - k), sign) for k in range(d)]


def _demazure_terms(i, terms, l):
    t = {}
    if i == -1:
        for e, c in terms.items():
            a, b = e[0], e[1]
            # x_1 = -y; the operator is of type A in (y, x_2)
            c0 = -c if a & 1 else c
            for (p, r), s in _typea_terms(a, b):
                ne = (p, r) + e[2:]
                v = c0 * s
                if p & 1:
                    v = -v
                t[ne] = t.get(ne, 0) + v
    elif 1 <= i <= l - 1:
        for e, c in terms.items():
            a, b = e[i - 1], e[i]
            for (p, r), s in _typea_terms(a, b):
                ne = e[:i - 1] + (p, r) + e[i + 1:]
                t[ne] = t.get(ne, 0) + c * s
    else:
        raise ValueError(f"no Demazure operator {i} for l={l}")
    return {e: c for e, c in t.items() if c}


def demazure(i, f):
    """partial_i(f) = (f - s_i f)/alpha_i, computed monomial by monomial."""
    return MultiPoly(f.l, _demazure_terms(i, f.terms, f.l))


def demazure_word(word, f):
    """Composite operator partial_{w[0]} o ... o partial_{w[-1]}; the last letter acts first."""
    # the operators preserve integrality, so run them on integer coefficients
    t, den = f._integral()
    for i in reversed(list(word)):
        t = _demazure_terms(i, t, f.l)
        if not t:
            break
    if den == 1:
        return MultiPoly._raw(f.l, t)
    return MultiPoly._raw(f.l, {e: (c // den if c % den == 0 else Fraction(c, den))
                                for e, c in t.items()})


@lru_cache(maxsize=None)
def canonical_word(I, J, l):
    """Lexicographically smallest reduced word of w_I w_J (J a subset of I)."""
    I, J = frozenset(I), frozenset(J)
    if not J <= I:
        raise ValueError("need J contained in I")
    wI = weyl.longest_and_poincare(I, l)[0]
    wJ = weyl.longest_and_poincare(J, l)[0]
    return tuple(weyl.group(l).reduced_word(wI * wJ))


def divide_exact(f, g):
    """f/g by leading-term elimination; raises ArithmeticError on remainder."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    l = f.l
    key = lambda e: (sum(e), e)
    ge, gc = max(g.terms.items(), key=lambda kv: key(kv[0]))
    rem = dict(f.terms)
    quot = {}
    gc = Fraction(gc)
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        de = tuple(a - b for a, b in zip(e, ge))
        if min(de) < 0:
            raise ArithmeticError("inexact polynomial division")
        qc = _norm(Fraction(c) / gc)
        quot[de] = qc
        for e2, c2 in g.terms.items():
            ne = tuple(a + b for a, b in zip(de, e2))
            v = rem.get(ne, 0) - qc * c2
            if v:
                rem[ne] = _norm(v)
            else:
                rem.pop(ne, None)
    return MultiPoly(l, quot)


# ---------------------------------------------------------------- roots

def _root_vector(i, l):
    v = [0] * l
    if i == -1:
        v[0], v[1] = 1, 1
    else:
        v[i - 1], v[i] = -1, 1
    return tuple(v)


def _act_vec(w, v):
    out = [0] * len(v)
    for k, a in enumerate(v):
        if a:
            img = w[k]
            out[abs(img) - 1] += a if img > 0 else -a
    return tuple(out)


def _is_positive(v):
    for a in reversed(v):
        if a:
            return a > 0
    return False


@lru_cache(maxsize=None)
def positive_roots(I, l):
    """Positive roots of W_I, as coefficient vectors."""
    G = weyl.group(l)
    roots = set()
    for k in G.parabolic(frozenset(I)):
        w = G.elements[k]
        for i in I:
            v = _act_vec(w, _root_vector(i, l))
            if _is_positive(v):
                roots.add(v)
    return tuple(sorted(roots))


def _linear(v, l):
    return MultiPoly(l, {tuple(1 if j == k else 0 for j in range(l)): a
                         for k, a in enumerate(v) if a})


@lru_cache(maxsize=None)
def mu(I, l):
    """Product of the positive roots of W_I."""
    out = one(l)
    for v in positive_roots(frozenset(I), l):
        out = out * _linear(v, l)
    return out


@lru_cache(maxsize=None)
def eta(I, J, l):
    """eta^J_I = alternating product of mu_K over J <= K <= I."""
    I, J = frozenset(I), frozenset(J)
    if not J <= I:
        raise ValueError("need J contained in I")
    num, den = one(l), one(l)
    extra = sorted(I - J)
    for r in range(len(extra) + 1):
        for S in combinations(extra, r):
            K = J | frozenset(S)
            if (len(I) - len(K)) % 2 == 0:
                num = num * mu(K, l)
            else:
                den = den * mu(K, l)
    return divide_exact(num, den)


def random_poly(l, rng, max_deg=6, max_terms=8, coeff_range=5):
    """Seeded random polynomial (polynomial degree <= max_deg)."""
    t = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_deg)
        e = [0] * l
        for _ in range(d):
            e[rng.randrange(l)] += 1
        t[tuple(e)] = rng.randint(-coeff_range, coeff_range)
    return MultiPoly(l, t)


def symmetrize(f, I):
    """Sum of w(f) over the W_I-orbit representatives (orbit sum)."""
    G = weyl.group(f.l)
    seen = set()
    out = zero(f.l)
    for k in G.parabolic(frozenset(I)):
        g = act(G.elements[k], f)
        key = frozenset(g.terms.items())
        if key not in seen:
            seen.add(key)
            out = out + g
    return out


__all__ = [
    "MultiPoly", "act", "gamma", "demazure", "demazure_word", "canonical_word",
    "mu", "eta", "divide_exact", "elementary", "complete", "root", "x", "const",
    "one", "zero", "random_poly", "is_invariant", "positive_roots", "symmetrize",
]
