"""Symmetric functions in the elementary basis.

A SymFunc maps partitions (weakly decreasing tuples of e-indices) to
rational coefficients; the tuple (3, 1, 1) stands for e_3 e_1^2.  Series in
u^{-1} are lists of SymFunc coefficients truncated at a chosen order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from . import linalg
from .polyops import elementary, one, zero


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class SymFunc:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                key = tuple(sorted((int(i) for i in k if i != 0), reverse=True))
                v = t.get(key, 0) + c
                if v:
                    t[key] = _norm(v)
                else:
                    t.pop(key, None)
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def e(cls, r):
        if r < 0:
            return cls()
        return cls({(r,) if r else (): 1})

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == SymFunc.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        return other if isinstance(other, SymFunc) else SymFunc.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = _norm(v)
            else:
                t.pop(k, None)
        out = SymFunc()
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SymFunc()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            if not other:
                return SymFunc()
            out = SymFunc()
            out.terms = {k: _norm(c * other) for k, c in self.terms.items()}
            return out
        t = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(sorted(k1 + k2, reverse=True))
                t[k] = t.get(k, 0) + c1 * c2
        return SymFunc(t)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = SymFunc.const(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self):
        return max((sum(k) for k in self.terms), default=None)

    def homogeneous_part(self, d):
        return SymFunc({k: c for k, c in self.terms.items() if sum(k) == d})

    def __repr__(self):
        return f"SymFunc({self.to_str()})"

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (-sum(k), k)):
            c = self.terms[k]
            mono = "*".join(f"e{i}" for i in k)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return json.dumps({" ".join(map(str, k)): str(c) for k, c in sorted(self.terms.items())})


ONE = SymFunc.const(1)


def e(r):
    return SymFunc.e(r)


@lru_cache(maxsize=None)
def complete_h(r):
    """h_r from e(-u)h(u) = 1: h_r = sum_{k=1}^r (-1)^{k+1} e_k h_{r-k}."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return ONE
    out = SymFunc()
    for k in range(1, r + 1):
        term = e(k) * complete_h(r - k)
        out = out + (term if k % 2 else -term)
    return out


@lru_cache(maxsize=None)
def schur_q(r):
    """q_r = sum_{s=0}^r h_s e_{r-s}."""
    if r < 0:
        raise ValueError("r must be >= 0")
    out = SymFunc()
    for s in range(r + 1):
        out = out + complete_h(s) * e(r - s)
    return out


@lru_cache(maxsize=None)
def e2_part(r):
    """e_r^[2] = e_r^2 + 2(-1)^r e_{2r} + 2 sum_{s=1}^{r-1} (-1)^{r-s} e_s e_{2r-s}."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return ONE
    out = e(r) * e(r) + e(2 * r) * (2 * (-1) ** r)
    for s in range(1, r):
        out = out + e(s) * e(2 * r - s) * (2 * (-1) ** (r - s))
    return out


def evaluate(f, l):
    """ev_l: e_r -> e_r(x_1..x_l), zero for r > l."""
    cache = {}
    variables = list(range(1, l + 1))
    out = zero(l)
    for k, c in f.terms.items():
        term = one(l)
        for i in k:
            if i not in cache:
                cache[i] = elementary(i, variables, l)
            term = term * cache[i]
            if not term:
                break
        if term:
            out = out + term.scale(c)
    return out


# ---------------------------------------------------------------- series

def series_e(order):
    """Coefficients of u^0..u^{-order} in e(u)."""
    return [e(k) for k in range(order + 1)]


def series_h(order):
    return [complete_h(k) for k in range(order + 1)]


def series_q(order):
    return [schur_q(k) for k in range(order + 1)]


def series_e2(order):
    """e^[2](u) = sum (-1)^r e_r^[2] u^{-2r}; odd coefficients vanish."""
    out = []
    for k in range(order + 1):
        out.append(e2_part(k // 2) * (-1) ** (k // 2) if k % 2 == 0 else SymFunc())
    return out


def series_mul(a, b, order):
    out = [SymFunc() for _ in range(order + 1)]
    for i in range(min(order, len(a) - 1) + 1):
        for j in range(min(order - i, len(b) - 1) + 1):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def series_negate_u(a):
    """Coefficients of f(-u) from those of f(u)."""
    return [c if k % 2 == 0 else -c for k, c in enumerate(a)]


def series_identity(order):
    return [ONE] + [SymFunc() for _ in range(order)]


# ---------------------------------------------------------------- generators

def _gen_monomials(gens, degree):
    """Monomials (as index tuples) in gens of total degree exactly `degree`."""
    out = []
    degs = [g[0] for g in gens]

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(gens)):
            if degs[i] <= left:
                rec(i, left - degs[i], acc + [i])

    rec(0, degree, [])
    return out


def q_and_e2_generators(max_degree):
    """(degree, name, SymFunc) for odd q_k and e_r^[2] up to max_degree."""
    gens = [(k, f"q{k}", schur_q(k)) for k in range(1, max_degree + 1, 2)]
    gens += [(2 * r, f"e{r}[2]", e2_part(r)) for r in range(1, max_degree // 2 + 1)]
    return sorted(gens, key=lambda g: (g[0], g[1]))


def _product(gens, mono):
    out = ONE
    for i in mono:
        out = out * gens[i][2]
    return out


def independence_rank(gens, degree):
    """(number of monomials, rank of their e-expansions) in the given degree."""
    monos = _gen_monomials(gens, degree)
    polys = [_product(gens, m) for m in monos]
    keys = sorted({k for p in polys for k in p.terms})
    rows = [[p.terms.get(k, 0) for k in keys] for p in polys]
    return len(monos), linalg.rank(rows, len(keys))


def express_in_generators(f, gens):
    """Coefficients of a homogeneous f in monomials of gens (must be unique)."""
    d = f.degree() or 0
    monos = _gen_monomials(gens, d)
    polys = [_product(gens, m) for m in monos]
    keys = sorted({k for p in polys for k in p.terms} | set(f.terms))
    cols = [[p.terms.get(k, 0) for p in polys] for k in keys]
    rhs = [f.terms.get(k, 0) for k in keys]
    sol = linalg.solve(cols, rhs, len(polys))
    return {m: c for m, c in zip(monos, sol) if c}


def partitions_of_degree(d):
    """All partitions of d, used as the e-monomial basis of degree d."""
    out = []
    for k in range(d + 1):
        for combo in combinations_with_replacement(range(1, d + 1), k):
            if sum(combo) == d:
                out.append(tuple(sorted(combo, reverse=True)))
    return out
