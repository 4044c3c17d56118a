"""Frobenius extensions R^I in R^J (J a subset of I): traces, homogeneous
bases, dual bases and coproducts."""

from __future__ import annotations

import json
import threading
from functools import lru_cache
from itertools import combinations_with_replacement

from . import linalg, weyl
from .polyops import MultiPoly, act, canonical_word, demazure_word, is_invariant, x, zero


def _monomials(l, d):
    out = []
    for combo in combinations_with_replacement(range(l), d):
        e = [0] * l
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


@lru_cache(maxsize=None)
def invariant_basis(J, d, l):
    """A Q-basis of the W_J-invariants of polynomial degree d (Reynolds images)."""
    G = weyl.group(l)
    elts = [G.elements[k] for k in sorted(G.parabolic(frozenset(J)))]
    seen = set()
    out = []
    for e in _monomials(l, d):
        if e in seen:
            continue
        m = MultiPoly(l, {e: 1})
        total = zero(l)
        for w in elts:
            total = total + act(w, m)
        orbit = {act(w, m).leading()[0] for w in elts}
        seen |= orbit
        if total:
            out.append(total)
    return tuple(out)



class FrobeniusStep:
    """R^I inside R^J for J contained in I, with a chosen basis and its dual."""

    def __init__(self, lower, upper, l, basis, dual, trace_word):
        self.lower = frozenset(lower)
        self.upper = frozenset(upper)
        self.l = l
        self.basis = tuple(basis)
        self.dual = tuple(dual)
        self.trace_word = tuple(trace_word)

    @property
    def rank(self):
        return len(self.basis)

    def trace(self, f, check=True):
        if check and not is_invariant(f, self.upper):
            raise ValueError("trace input is not invariant under W_J")
        out = demazure_word(self.trace_word, f)
        if check and not is_invariant(out, self.lower):
            raise ArithmeticError("trace output is not invariant under W_I")
        return out

    def coproduct(self):
        return list(zip(self.basis, self.dual))

    def decompose(self, f, check=False):
        """Coefficients c_b in R^I with f = sum_b c_b b."""
        return [self.trace(f * bd, check=check) for bd in self.dual]

    def to_json(self):
        return {
            "lower": sorted(self.lower), "upper": sorted(self.upper), "l": self.l,
            "trace_word": list(self.trace_word),
            "basis": [b.to_json() for b in self.basis],
            "dual": [b.to_json() for b in self.dual],
        }

    def dumps(self):
        return json.dumps(self.to_json())


def graded_rank(I, J, l):
    """Number of basis elements in each polynomial degree, from pi_I^+/pi_J^+."""
    ratio = weyl.poincare_plus(frozenset(I), l).exact_div(weyl.poincare_plus(frozenset(J), l))
    top = weyl.longest_length(frozenset(I), l) - weyl.longest_length(frozenset(J), l)
    ranks = [0] * (top + 1)
    for e, c in ratio.items():
        if e % 2 or c < 0:
            raise ArithmeticError("unexpected Poincare quotient")
        ranks[e // 2] = c
    return ranks


def _pairing_rows(cands, comps, word):
    rows = []
    for f in cands:
        rows.append([demazure_word(word, f * g).constant_term() for g in comps])
    return rows


def _default_candidates(J, d, l):
    cands = []
    if 1 not in J and -1 not in J:
        cands.append(x(l, 1) ** d)
    return cands + list(invariant_basis(frozenset(J), d, l))


def _dual_basis(basis, degs, J, word, l, top):
    dual = [None] * len(basis)
    for d in sorted(set(degs)):
        block = [a for a, dd in enumerate(degs) if dd == d]
        V = invariant_basis(frozenset(J), top - d, l)
        eqs = [e for e, dd in enumerate(degs) if dd >= d]
        # traces tr(b_e * V_k) as polynomials, one column per V_k
        traces = {(e, k): demazure_word(word, basis[e] * V[k]) for e in eqs for k in range(len(V))}
        rows, keys = [], []
        for e in eqs:
            monos = sorted({m for k in range(len(V)) for m in traces[(e, k)].terms})
            if degs[e] == d:
                monos = sorted(set(monos) | {(0,) * l})
            for m in monos:
                rows.append([traces[(e, k)].terms.get(m, 0) for k in range(len(V))])
                keys.append((e, m))
        for a in block:
            rhs = [1 if (e == a and m == (0,) * l) else 0 for e, m in keys]
            coeffs = linalg.solve(rows, rhs, len(V))
            v = zero(l)
            for c, p in zip(coeffs, V):
                if c:
                    v = v + p.scale(c)
            dual[a] = v
    return dual


_lock = threading.RLock()
_cache = {}


def build_basis(I, J, l, preferred=None):
    """Homogeneous basis of R^J over R^I with its dual basis.

    preferred: optional list of W_J-invariant homogeneous candidates tried
    first in each degree.
    """
    I, J = frozenset(I), frozenset(J)
    if not J <= I:
        raise ValueError("need J contained in I")
    key = (I, J, l, None if preferred is None else tuple(preferred))
    with _lock:
        if key in _cache:
            return _cache[key]
    word = canonical_word(I, J, l)
    ranks = graded_rank(I, J, l)
    top = len(ranks) - 1
    basis, degs = [], []
    for d, k in enumerate(ranks):
        if k == 0:
            continue
        cands = []
        if preferred is not None:
            cands = [p for p in preferred if p and 2 * d == p.degree() and p.is_homogeneous()]
        cands += _default_candidates(J, d, l)
        comps = list(invariant_basis(J, top - d, l))
        rows = _pairing_rows(cands, comps, word)
        chosen = linalg.independent_rows(rows, len(comps))
        if len(chosen) != k:
            raise ArithmeticError(f"rank mismatch in degree {d}: {len(chosen)} != {k}")
        for idx in chosen:
            basis.append(cands[idx])
            degs.append(d)
    dual = _dual_basis(basis, degs, J, word, l, top)
    step = FrobeniusStep(I, J, l, basis, dual, word)
    with _lock:
        _cache[key] = step
    return step


def step_with_basis(I, J, l, basis):
    """A step using exactly the given basis (validated and dualized)."""
    I, J = frozenset(I), frozenset(J)
    basis = list(basis)
    degs = []
    for b in basis:
        if not b.is_homogeneous() or not is_invariant(b, J):
            raise ValueError("basis elements must be homogeneous W_J-invariants")
        degs.append((b.degree() or 0) // 2)
    ranks = graded_rank(I, J, l)
    if sorted(degs) != sorted(d for d, k in enumerate(ranks) for _ in range(k)):
        raise ValueError("basis degrees do not match the graded rank")
    word = canonical_word(I, J, l)
    top = len(ranks) - 1
    dual = _dual_basis(basis, degs, J, word, l, top)
    return FrobeniusStep(I, J, l, basis, dual, word)


def trace(I, J, l, f, check=True):
    """tr^J_I(f) along the canonical reduced word."""
    I, J = frozenset(I), frozenset(J)
    if check and not is_invariant(f, J):
        raise ValueError("trace input is not invariant under W_J")
    return demazure_word(canonical_word(I, J, l), f)


def step(I, J, l):
    """Default step used throughout: powers of x_1 are preferred when allowed."""
    return build_basis(frozenset(I), frozenset(J), l)


def coproduct(st):
    return st.coproduct()


def tensor_coords(pairs, right_step):
    """Canonical coordinates of sum u (x) v in R^K (x)_{R^I} R^J.

    Each v is decomposed over the basis of right_step; the result maps basis
    index -> polynomial left factor.
    """
    out = {}
    for u, v in pairs:
        for a, c in enumerate(right_step.decompose(v)):
            if c:
                prod = u * c
                out[a] = out.get(a, zero(u.l)) + prod
    return {a: p for a, p in out.items() if p}


def product_step(inner, outer):
    """Basis {a b} of R^K over R^I with duals {a^v b^v} from K<=J and J<=I steps."""
    l = inner.l
    basis = [a * b for a in inner.basis for b in outer.basis]
    dual = [ad * bd for ad in inner.dual for bd in outer.dual]
    word = canonical_word(outer.lower, inner.upper, l)
    return FrobeniusStep(outer.lower, inner.upper, l, basis, dual, word)
