# Laurent polynomials in one variable q with integer coefficients.
import json


class LaurentPoly:
    """
    Sparse Laurent polynomial in q.

    Stored as a dict {exponent: coefficient} with zero coefficients pruned,
    so two polynomials are equal iff their dicts are equal.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def const(cls, a):
        return cls({0: a})

    @classmethod
    def monomial(cls, e, a=1):
        return cls({e: a})

    @property
    def coeffs(self):
        return dict(self._c)

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def subs_q2(self):
        """Substitute q -> q^2."""
        return LaurentPoly({2 * e: v for e, v in self._c.items()})

    def top_degree(self):
        return max(self._c) if self._c else None

    def low_degree(self):
        return min(self._c) if self._c else None

    def at_one(self):
        return sum(self._c.values())

    def divmod(self, other):
        """
        Long division by another Laurent polynomial, working from the top
        degree down.  Returns (quotient, remainder); remainder is zero iff the
        division is exact in Z[q, q^-1].
        """
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        rem = LaurentPoly(self._c)
        dtop = other.top_degree()
        dlow = other.low_degree()
        lead = other[dtop]
        quo = {}
        while rem._c:
            top = rem.top_degree()
            if top - dtop < rem.low_degree() - dlow:
                break
            v = rem[top]
            if v % lead:
                break
            k = v // lead
            e = top - dtop
            quo[e] = quo.get(e, 0) + k
            rem = rem - other.shift(e) * k
        return LaurentPoly(quo), rem

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division of {self} by {other}")
        return q

    def __repr__(self):
        return f"LaurentPoly({self.to_str()})"

    def to_str(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                qe = "q" if e == 1 else f"q^{e}"
                mono = qe if abs(v) == 1 else f"{abs(v)}*{qe}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    __str__ = to_str

    def to_latex(self):
        if not self._c:
            return "0"
        s = ""
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                qe = "q" if e == 1 else "q^{%d}" % e
                mono = qe if abs(v) == 1 else f"{abs(v)}{qe}"
            if not s:
                s = ("-" if v < 0 else "") + mono
            else:
                s += ("-" if v < 0 else "+") + mono
        return s

    def to_json(self):
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, d):
        if isinstance(d, str):
            d = json.loads(d)
        return cls({int(k): v for k, v in d.items()})


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
q = LaurentPoly.monomial(1)


def bar(p):
    """q -> q^-1."""
    return LaurentPoly({-e: v for e, v in p.coeffs.items()})


def qint(n):
    """Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}."""
    if n < 0:
        raise ValueError("qint needs n >= 0")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def qfact(n):
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def qbinom(n, r, base="q"):
    """
    Quantum binomial [n choose r] in base q or q^2.  Computed as an exact
    quotient of quantum factorials; zero if r > n.
    """
    if r < 0 or n < 0:
        raise ValueError("qbinom needs n, r >= 0")
    if r > n:
        return ZERO
    num = ONE
    for k in range(n - r + 1, n + 1):
        num = num * qint(k)
    val = num.exact_div(qfact(r))
    if base in ("q2", "q^2", 2):
        return val.subs_q2()
    if base != "q":
        raise ValueError(f"unknown base {base!r}")
    return val
