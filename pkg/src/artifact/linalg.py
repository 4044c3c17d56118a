"""Exact rational linear algebra helpers on top of sympy's DomainMatrix."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_dm(rows, ncols):
    conv = [[QQ(int(Fraction(v).numerator), int(Fraction(v).denominator)) for v in r] for r in rows]
    return DomainMatrix(conv, (len(rows), ncols), QQ)


def independent_rows(rows, ncols):
    """Indices of the greedily chosen (earliest) linearly independent rows."""
    if not rows or ncols == 0:
        return []
    M = _to_dm(rows, ncols).transpose()
    _, pivots = M.rref()
    return list(pivots)


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return _to_dm(rows, ncols).rank()


def solve(A, b, ncols):
    """The unique x with A x = b; raises ValueError if none or not unique."""
    m = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, pivots = _to_dm(aug, ncols + 1).rref()
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) != ncols:
        raise ValueError("linear system has no unique solution")
    dense = R.to_Matrix()
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = dense[r, ncols]
    return [_from_sympy(v) for v in x]


def _from_sympy(v):
    f = Fraction(int(v.p), int(v.q)) if hasattr(v, "p") else Fraction(v)
    return int(f) if f.denominator == 1 else f


def inverse(M):
    """Inverse of a square rational matrix as nested lists."""
    n = len(M)
    inv = _to_dm(M, n).inv().to_Matrix()
    return [[_from_sympy(inv[i, j]) for j in range(n)] for i in range(n)]
