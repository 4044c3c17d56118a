"""The module V(l) with its standard basis f^(n) eta, the icanonical basis
b^(n) eta, the action of b, the ibar involution and the bilinear form.

t denotes the parity of l.  Polynomials in b are lists of Laurent
polynomials indexed by the power of b.
"""

from __future__ import annotations

from functools import lru_cache

from .qlaurent import LaurentPoly, ONE, ZERO, bar, qbinom, qfact, qint


def parity(l):
    return l % 2


class VlElt:
    __slots__ = ("l", "coords")

    def __init__(self, l, coords=None):
        if l < 0:
            raise ValueError("l must be >= 0")
        self.l = l
        cs = list(coords or [])
        if len(cs) > l + 1:
            raise ValueError("coordinate index out of range 0..l")
        cs += [ZERO] * (l + 1 - len(cs))
        self.coords = [LaurentPoly.const(c) if isinstance(c, int) else c for c in cs]

    @classmethod
    def std(cls, n, l):
        """f^(n) eta_l (zero for n > l)."""
        v = cls(l)
        if 0 <= n <= l:
            v.coords[n] = ONE
        return v

    def __eq__(self, other):
        return isinstance(other, VlElt) and self.l == other.l and self.coords == other.coords

    def __add__(self, other):
        return VlElt(self.l, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return VlElt(self.l, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return VlElt(self.l, [-a for a in self.coords])

    def scale(self, p):
        return VlElt(self.l, [a * p for a in self.coords])

    def is_zero(self):
        return all(not c for c in self.coords)

    def __repr__(self):
        parts = [f"({c})f^({n})" for n, c in enumerate(self.coords) if c]
        return "VlElt(" + (" + ".join(parts) if parts else "0") + ")"

    def to_json(self):
        return {"l": self.l, "coords": [c.to_json() for c in self.coords]}


def eta(l):
    return VlElt.std(0, l)


def b_act(v):
    """b f^(n) = [n+1] f^(n+1) + q^{2n-l-1}[l-n+1] f^(n-1)."""
    l = v.l
    out = [ZERO] * (l + 1)
    for n, c in enumerate(v.coords):
        if not c:
            continue
        if n < l:
            out[n + 1] = out[n + 1] + c * qint(n + 1)
        if n > 0:
            out[n - 1] = out[n - 1] + c * LaurentPoly.monomial(2 * n - l - 1) * qint(l - n + 1)
    return VlElt(l, out)


def icanonical_formula(n, l):
    """Closed-form expansion of b^(n) eta_l in the standard basis."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > l:
        return VlElt(l)
    t = parity(l)
    out = [ZERO] * (l + 1)
    for i in range(n // 2 + 1):
        if (n - t) % 2 == 0:
            coef = LaurentPoly.monomial(-i * (l + 2 * i - n - 1)) * qbinom((l + 2 * i - n) // 2, i, "q2")
        else:
            coef = LaurentPoly.monomial(-i * (l + 2 * i - n)) * qbinom((l + 2 * i - n - 1) // 2, i, "q2")
        out[n - 2 * i] = out[n - 2 * i] + coef
    return VlElt(l, out)


@lru_cache(maxsize=None)
def _recursive(l, upto):
    t = parity(l)
    vals = [eta(l)]
    for n in range(upto):
        nxt = b_act(vals[n])
        if n % 2 == t % 2 and n >= 1:
            nxt = nxt - vals[n - 1].scale(qint(n))
        vals.append(VlElt(l, [c.exact_div(qint(n + 1)) for c in nxt.coords]))
    return tuple(vals)


def icanonical_recursive(n, l):
    """b^(n) eta_l from b b^(n) = [n+1] b^(n+1) (+ [n] b^(n-1) when n = t mod 2)."""
    return _recursive(l, n)[n]


def icanonical(n, l):
    """b^(n) eta_l; the closed formula is checked against the recursion."""
    v = icanonical_formula(n, l)
    if v != icanonical_recursive(n, l):
        raise ArithmeticError(f"closed formula and recursion disagree at n={n}, l={l}")
    return v


def std_form_value(n, l):
    """(f^(n) eta, f^(n) eta)_l = q^{-n(l-n)} [l choose n]."""
    return LaurentPoly.monomial(-n * (l - n)) * qbinom(l, n)


def bilinear_form_l(u, v):
    if u.l != v.l:
        raise ValueError("level mismatch")
    total = ZERO
    for n, (a, b) in enumerate(zip(u.coords, v.coords)):
        if a and b:
            total = total + a * b * std_form_value(n, u.l)
    return total


def to_icanonical(v):
    """Coordinates of v in the icanonical basis (unitriangular solve)."""
    l = v.l
    rem = VlElt(l, list(v.coords))
    out = [ZERO] * (l + 1)
    for n in range(l, -1, -1):
        c = rem.coords[n]
        if c:
            out[n] = c
            rem = rem - icanonical(n, l).scale(c)
    return out


def from_icanonical(coeffs, l):
    v = VlElt(l)
    for n, c in enumerate(coeffs):
        if c:
            v = v + icanonical(n, l).scale(c)
    return v


def ibar(v):
    """The bar involution fixing each b^(n) eta_l."""
    return from_icanonical([bar(c) for c in to_icanonical(v)], v.l)


# ---------------------------------------------------------------- monomials in b

def _pmul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


@lru_cache(maxsize=None)
def scaled_divided_power(m, t):
    """[m]! b^(m) as a monic polynomial in b."""
    poly = [ONE]
    if m % 2:
        poly = [ZERO, ONE]
        ks = range(1, m)
    else:
        ks = range(0, m)
    for k in ks:
        if k % 2 == t % 2:
            poly = _pmul(poly, [-(qint(k) * qint(k)), ZERO, ONE])
    if len(poly) != m + 1 or poly[m] != ONE:
        raise ArithmeticError("divided power is not monic of the expected degree")
    return tuple(poly)


@lru_cache(maxsize=None)
def monomial_expand_ui(n, t):
    """Coefficients a_m with b^n = sum_m a_m b^(m) in the integral form."""
    rem = [ZERO] * n + [ONE]
    out = [ZERO] * (n + 1)
    for m in range(n, -1, -1):
        c = rem[m]
        if not c:
            continue
        out[m] = c * qfact(m)
        P = scaled_divided_power(m, t)
        for k, pc in enumerate(P):
            if pc:
                rem[k] = rem[k] - c * pc
    if any(rem):
        raise ArithmeticError("monomial expansion left a remainder")
    return tuple(out)


def monomial_expand(n, l):
    """Coefficients of b^n eta_l on b^(m) eta_l for m = 0..n (zero for m > l)."""
    coeffs = list(monomial_expand_ui(n, parity(l)))
    return [c if m <= l else ZERO for m, c in enumerate(coeffs)]


def _padded_parts(i, c, t):
    """Weakly decreasing lists of exactly i parts in 0..c, every part != t mod 2."""
    allowed = [p for p in range(c + 1) if p % 2 != t % 2]

    def rec(k, maxp):
        if k == 0:
            yield ()
            return
        for p in allowed:
            if p <= maxp:
                for rest in rec(k - 1, p):
                    yield (p,) + rest

    return list(rec(i, c))


def partition_expand(n, l, truncate=True):
    """Partition formula for the coefficients of b^n (padded-part convention)."""
    t = parity(l)
    out = [ZERO] * (n + 1)
    for i in range(n // 2 + 1):
        m = n - 2 * i
        if truncate and m > l:
            continue
        s = ZERO
        for lam in _padded_parts(i, m, t):
            term = ONE
            for p in lam:
                term = term * qint(p + 1) * qint(p + 1)
            s = s + term
        out[m] = out[m] + qfact(m) * s
    return out


# ---------------------------------------------------------------- exports

def transition_matrix(l):
    """Row n: coordinates of b^(n) eta_l in the standard basis."""
    return [icanonical(n, l).coords for n in range(l + 1)]


def gram_matrix(l):
    basis = [icanonical(n, l) for n in range(l + 1)]
    return [[bilinear_form_l(u, v) for v in basis] for u in basis]


def phi_check(l):
    """Compare V(l) with V inside the extended Schur algebra.

    Returns a list of (name, ok, witness) triples.
    """
    from . import schur
    from .weyl import MAX_RANK
    from math import comb

    if l == 1:
        v = b_act(b_act(eta(1)))
        return [("b squared is one on V(1)", v == eta(1), None if v == eta(1) else repr(v))]
    if l < 1 or l > min(MAX_RANK, schur.MAX_HECKE_RANK):
        raise ValueError("phi_check needs 1 <= l <= 4")
    results = []
    H = [schur.V_standard(n, l) for n in range(l + 1)]
    bb = schur.b_element(l)
    for n in range(l + 1):
        # b acts on bar(f^(n) eta); transport is semilinear on coefficients
        img = schur.schur_compose(bb, H[n])
        expect = schur.SchurElt(l)
        if n < l:
            expect = expect + H[n + 1].scale(qint(n + 1))
        if n > 0:
            expect = expect + H[n - 1].scale(LaurentPoly.monomial(l - 2 * n + 1) * qint(l - n + 1))
        results.append((f"b-action on standard vector {n}", img == expect,
                        None if img == expect else repr(img)))
    for n in range(l + 1):
        kl = schur.kl_coset_elt(n, l)
        ok = schur.schur_bar(kl) == kl
        results.append((f"bar invariance of canonical vector {n}", ok, None if ok else repr(kl)))
    norm = LaurentPoly.monomial(-comb(l, 2))
    for n in range(l + 1):
        for m in range(l + 1):
            lhs = bar(bilinear_form_l(VlElt.std(n, l), VlElt.std(m, l)))
            rhs = norm * schur.bilinear_form(H[n], H[m])
            results.append((f"form on standard pair ({n},{m})", lhs == rhs,
                            None if lhs == rhs else f"{lhs} vs {rhs}"))
    return results
