"""Nerve of the cover of P minus Q by the open pieces P cap {phi_i < 0}."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import InputError, CapExceeded
from ..ratgeom import lp
from .simplicial import SimplicialComplex, BettiTable, reduced_cohomology

DEFAULT_MAX_SIMPLICES = 200000


def _lcm_den(xs):
    d = 1
    for x in xs:
        d = d * x.denominator // gcd(d, x.denominator)
    return d


class PairData:
    """Precomputed phi_i(v) = b_i - a_i.v for rows a_i.x <= b_i of Q and vertices v
    of P, scaled per row to integers; a shift by m adds a_i.m."""

    def __init__(self, P, Q):
        if P.is_empty or Q.is_empty:
            raise InputError("nerve needs nonempty polytopes")
        if not (P.bounded and Q.bounded):
            raise InputError("nerve needs bounded polytopes")
        if P.ambient != Q.ambient:
            raise InputError("ambient dimension mismatch")
        self.P, self.Q = P, Q
        V = P.vertices
        self.rows = []
        for a, b in Q.le_rows():
            vals = [b - sum(x * y for x, y in zip(a, v)) for v in V]
            s = _lcm_den(list(vals) + list(a))
            self.rows.append(([int(x * s) for x in vals], [int(x * s) for x in a]))

    def cover(self, m=None):
        return ViolationCover(self, m)


class ViolationCover:
    """U_i = P cap {phi_i < 0}; nonempty iff some vertex has phi_i(v) < 0."""

    def __init__(self, data, m=None):
        if not isinstance(data, PairData):
            raise TypeError("use PairData(P, Q).cover(m)")
        self.P = data.P
        values, seen = [], set()
        for vals, a in data.rows:
            if m is not None:
                sh = sum(x * y for x, y in zip(a, m))
                if sh.__class__ is not int:
                    sh = Fraction(sh)
                    if sh.denominator != 1:
                        raise InputError("translation must be integral")
                    sh = int(sh)
                vals = [x + sh for x in vals] if sh else vals
            if min(vals) >= 0:
                continue
            # constraints agreeing on aff(P) up to positive scale cut out the same piece
            g = 0
            for x in vals:
                g = gcd(g, x)
            key = tuple(x // g for x in vals)
            if key in seen:
                continue
            seen.add(key)
            values.append(list(key))
        self.values = values
        self.npts = len(data.P.vertices)
        self.active = list(range(len(values)))

    # --- exact decisions
    def meets(self, S) -> bool:
        """Is P cap {phi_i < 0 for i in S} nonempty?"""
        rows = [self.values[i] for i in S]
        npts = self.npts
        for j in range(npts):
            if all(r[j] < 0 for r in rows):
                return True
        if len(rows) == 1:
            return min(rows[0]) < 0
        if len(rows) == 2:
            return not _pair_certificate(rows[0], rows[1])
        for j in range(npts):
            for k in range(j + 1, npts):
                if all(r[j] + r[k] < 0 for r in rows):
                    return True
        if all(sum(r) < 0 for r in rows):
            return True
        return lp.hull_feasible(rows, [], npts)

    def contained(self, j, i) -> bool:
        """U_j inside U_i ?"""
        rj, ri = self.values[j], self.values[i]
        if any(a < 0 and b >= 0 for a, b in zip(rj, ri)):
            return False
        return not _quadrant_meets(rj, ri)

    def dominant(self):
        """An index i with U_j inside U_i for every j, or None."""
        if not self.values:
            return None
        for i, r in enumerate(self.values):
            if max(r) < 0:
                return i
        neg = [frozenset(k for k, x in enumerate(r) if x < 0) for r in self.values]
        for i in self.active:
            if all(neg[j] <= neg[i] for j in self.active):
                if all(j == i or self.contained(j, i) for j in self.active):
                    return i
        return None


def _pair_certificate(r1, r2) -> bool:
    """Is there t > 0 with r1(v) + t r2(v) >= 0 for all v?  (Gordan certificate
    that no convex combination makes both rows negative; both rows have a
    negative entry so the multipliers must both be positive.)"""
    lo, hi = Fraction(0), None
    for a, b in zip(r1, r2):
        if b > 0:
            lo = max(lo, Fraction(-a, b))
        elif b < 0:
            t = Fraction(a, -b)
            hi = t if hi is None else min(hi, t)
        elif a < 0:
            return False
    if hi is None:
        return True
    return hi > 0 and lo <= hi


def _quadrant_meets(rx, ry) -> bool:
    """Does conv{(rx[v], ry[v])} meet {x < 0, y >= 0}?"""
    pts = list(zip(rx, ry))
    for x, y in pts:
        if x < 0 and y >= 0:
            return True
    for k, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[k + 1:]:
            # points p(t) = p1 + t (p2 - p1), t in [0, 1]
            lo, hi = Fraction(0), Fraction(1)
            lo_open = hi_open = False
            ok = True
            for (c0, c1, strict_neg) in ((x1, x2, True), (y1, y2, False)):
                d = c1 - c0
                if strict_neg:  # c0 + t d < 0
                    if d == 0:
                        ok = c0 < 0
                    elif d > 0:
                        t = Fraction(-c0, d)
                        if t < hi or (t == hi and not hi_open):
                            hi, hi_open = t, True
                    else:
                        t = Fraction(-c0, d)
                        if t > lo or (t == lo and not lo_open):
                            lo, lo_open = t, True
                else:  # c0 + t d >= 0
                    if d == 0:
                        ok = c0 >= 0
                    elif d > 0:
                        t = Fraction(-c0, d)
                        if t > lo:
                            lo, lo_open = t, False
                    else:
                        t = Fraction(-c0, d)
                        if t < hi:
                            hi, hi_open = t, False
                if not ok:
                    break
            if not ok:
                continue
            if lo < hi or (lo == hi and not lo_open and not hi_open):
                return True
    return False


def build_nerve(cover: ViolationCover, dim_cap, max_simplices=DEFAULT_MAX_SIMPLICES):
    act = cover.active
    level = [(i,) for i in act]
    simplices = list(level)
    present = set(level)
    size = 1
    while level and size <= dim_cap:
        nxt = []
        for s in level:
            for j in act:
                if j <= s[-1]:
                    continue
                t = s + (j,)
                if not all(t[:k] + t[k + 1:] in present for k in range(len(t) - 1)):
                    continue
                if cover.meets(t):
                    nxt.append(t)
        present.update(nxt)
        simplices += nxt
        if len(simplices) > max_simplices:
            raise CapExceeded(f"nerve exceeded {max_simplices} simplices")
        level = nxt
        size += 1
    return SimplicialComplex(len(act), tuple(simplices))


def nerve_of_violation_cover(P, Q, dim_cap=None, m=None):
    if dim_cap is None:
        dim_cap = P.dim + 1
    if dim_cap < P.dim + 1:
        raise InputError(f"dim_cap {dim_cap} < dim(P)+1 = {P.dim + 1} would truncate needed degrees")
    return build_nerve(PairData(P, Q).cover(m), dim_cap)


def cover_cohomology(cover, fast_path=True) -> BettiTable:
    if not cover.active:
        return BettiTable({-1: 1})
    if fast_path and cover.dominant() is not None:
        return BettiTable({})
    top = cover.P.dim
    K = build_nerve(cover, top + 1)
    h = reduced_cohomology(K)
    return BettiTable({p: d for p, d in h.entries.items() if p <= top})


def set_difference_cohomology(P, Q, m=None, fast_path=True) -> BettiTable:
    """Reduced cohomology of P minus (Q + m), through degree dim(P)."""
    return cover_cohomology(PairData(P, Q).cover(m), fast_path)
