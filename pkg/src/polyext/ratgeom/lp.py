"""Exact two-phase simplex over Fractions (Bland's rule, so it always terminates)."""
from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        row = [x / p for x in row]
        T[r] = row
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [x - f * y for x, y in zip(other, row)]
    basis[r] = c


def _run(T, basis, ncols, allowed):
    """Minimize the objective held in the last row of T (reduced costs)."""
    obj = T[-1]
    while True:
        obj = T[-1]
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(len(T) - 1):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)


def simplex(A, b, c):
    """min c.z s.t. A z = b, z >= 0.  Returns (status, z, value)."""
    m = len(A)
    n = len(c)
    rows = []
    for ai, bi in zip(A, b):
        ai = [Fraction(x) for x in ai]
        bi = Fraction(bi)
        if bi < 0:
            ai = [-x for x in ai]
            bi = -bi
        rows.append((ai, bi))
    # phase one with an artificial per row
    T = []
    for i, (ai, bi) in enumerate(rows):
        art = [ZERO] * m
        art[i] = Fraction(1)
        T.append(ai + art + [bi])
    phase1 = [ZERO] * (n + m + 1)
    for r in T:
        for j in range(n):
            phase1[j] -= r[j]
        phase1[-1] -= r[-1]
    T.append(phase1)
    basis = [n + i for i in range(m)]
    allowed = [True] * (n + m)
    _run(T, basis, n + m, allowed)
    if T[-1][-1] != 0:
        return "infeasible", None, None
    # drive artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            c_in = next((j for j in range(n) if T[i][j] != 0), None)
            if c_in is not None:
                _pivot(T, basis, i, c_in)
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]
    # phase two
    cf = [Fraction(x) for x in c]
    objrow = cf + [ZERO] * m + [ZERO]
    for i, bi in enumerate(basis):
        f = objrow[bi]
        if f:
            objrow = [x - f * y for x, y in zip(objrow, T[i])]
    T.append(objrow)
    allowed = [True] * n + [False] * m
    status = _run(T, basis, n + m, allowed)
    if status == "unbounded":
        return "unbounded", None, None
    z = [ZERO] * n
    for i, bi in enumerate(basis):
        z[bi] = T[i][-1]
    return "optimal", z, -T[-1][-1]


def max_slack(rows_le, rows_lt, rows_eq, nvars):
    """Decide {a.x <= b} & {a.x < b} & {a.x = b} with x free.

    Returns a witness tuple or None.  Strict rows are handled by maximizing a
    common slack t <= 1 and asking whether the optimum is positive.
    """
    # variables: u (n), v (n), tp, tm, then one slack per inequality row, one for t <= 1
    ineq = [(a, b, False) for a, b in rows_le] + [(a, b, True) for a, b in rows_lt]
    strict = bool(rows_lt)
    nslack = len(ineq) + (1 if strict else 0)
    N = 2 * nvars + 2 + nslack
    A, B = [], []
    for k, (a, b, st) in enumerate(ineq):
        row = [ZERO] * N
        for j, x in enumerate(a):
            row[j] = x
            row[nvars + j] = -x
        if st:
            row[2 * nvars] = Fraction(1)
            row[2 * nvars + 1] = Fraction(-1)
        row[2 * nvars + 2 + k] = Fraction(1)
        A.append(row)
        B.append(b)
    for a, b in rows_eq:
        row = [ZERO] * N
        for j, x in enumerate(a):
            row[j] = x
            row[nvars + j] = -x
        A.append(row)
        B.append(b)
    if strict:
        row = [ZERO] * N
        row[2 * nvars] = Fraction(1)
        row[2 * nvars + 1] = Fraction(-1)
        row[-1] = Fraction(1)
        A.append(row)
        B.append(Fraction(1))
    c = [ZERO] * N
    if strict:
        c[2 * nvars] = Fraction(-1)
        c[2 * nvars + 1] = Fraction(1)
    if not A:
        return tuple([ZERO] * nvars)
    status, z, val = simplex(A, B, c)
    if status != "optimal":
        return None
    if strict and -val <= 0:
        return None
    return tuple(z[j] - z[nvars + j] for j in range(nvars))


def hull_feasible(strict_vals, weak_vals, npts):
    """Is there a convex combination lam of npts points with
    sum_v lam_v s(v) < 0 for every strict row s and <= 0 for every weak row?

    Rows are given as value lists over the points.  Used for questions of the
    form 'does conv(V) meet an intersection of open/closed halfspaces'.
    """
    if not strict_vals and not weak_vals:
        return npts > 0
    # lam (npts), zp, zm, slacks
    nrows = len(strict_vals) + len(weak_vals)
    N = npts + 2 + nrows
    A, B = [], []
    k = 0
    for vals in strict_vals:
        row = [ZERO] * N
        row[:npts] = vals
        row[npts] = Fraction(-1)
        row[npts + 1] = Fraction(1)
        row[npts + 2 + k] = Fraction(1)
        k += 1
        A.append(row)
        B.append(ZERO)
    for vals in weak_vals:
        row = [ZERO] * N
        row[:npts] = vals
        row[npts + 2 + k] = Fraction(1)
        k += 1
        A.append(row)
        B.append(ZERO)
    row = [ZERO] * N
    for j in range(npts):
        row[j] = Fraction(1)
    A.append(row)
    B.append(Fraction(1))
    c = [ZERO] * N
    if strict_vals:
        c[npts] = Fraction(1)
        c[npts + 1] = Fraction(-1)
    status, z, val = simplex(A, B, c)
    if status == "infeasible":
        return False
    if not strict_vals:
        return True
    return val < 0
