"""Exact dense linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(x)


def vec(xs) -> tuple:
    return tuple(frac(x) for x in xs)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0}."""
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(red, piv):
            v[p] = -r[f]
        basis.append(tuple(v))
    return basis


def solve(A, b):
    """Unique solution of A x = b, or None if singular/inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    red, piv = rref(aug, n + 1)
    if n in piv or len(piv) != n:
        return None
    return tuple(r[n] for r in red)


def primitive(a, b=None):
    """Scale (a, b) by a positive rational so a is a primitive integer vector."""
    den = 1
    for x in a:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(x) for x in ints), (None if b is None else b * den)
    scale = Fraction(den, g)
    a2 = tuple(Fraction(x // g) for x in ints)
    return a2, (None if b is None else b * scale)


def int_rank(rows) -> int:
    """Rank of an integer matrix via fraction-free (Bareiss-style) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = m[i]
                m[i] = [pv * x - f * y for x, y in zip(row, pr)]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        r += 1
        if r == len(m):
            break
    return r
