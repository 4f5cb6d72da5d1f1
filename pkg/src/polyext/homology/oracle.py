"""Independent check: triangulate the closed set  P minus (Q+m)_{>eps}.

The closed set is the union of the pieces P cap {phi_i <= -eps}.  We cut P by
the hyperplanes phi_i = -eps, collect every face of every resulting region,
keep the cells whose relative interior lies in the closed set, and take the
order complex of that cell poset.  Nothing here uses LP or the nerve.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..errors import StructuralError
from ..ratgeom import Polyhedron
from ..ratgeom.linalg import dot, rank, solve
from .simplicial import SimplicialComplex, BettiTable, reduced_cohomology


def _restricted(P, rows):
    """Write each affine function b - a.x on aff(P) in chart coordinates y."""
    p0, dirs, piv = P.chart
    out = []
    for a, b in rows:
        out.append((tuple(dot(a, r) for r in dirs), b - dot(a, p0)))
    return out  # value(y) = const - coeffs.y


def _arrangement_delta(P, g):
    """Smallest nonzero |phi_i(v)| over vertices v of the arrangement of the
    facet hyperplanes of P and Q+m (inside aff P)."""
    d = P.dim
    hyper = [(c, k) for c, k in _restricted(P, P.ineqs) if any(c)]
    hyper += [(c, k) for c, k in g if any(c)]
    vals = []
    if d == 0:
        pts = [()]
    else:
        pts = set()
        for comb in itertools.combinations(range(len(hyper)), d):
            y = solve([hyper[i][0] for i in comb], [hyper[i][1] for i in comb])
            if y is not None:
                pts.add(y)
    for y in pts:
        for c, k in g:
            v = abs(k - dot(c, y))
            if v:
                vals.append(v)
    return min(vals) if vals else Fraction(1)


def _faces_of_region(R):
    """All nonempty faces of a full-dimensional polytope R, as vertex frozensets."""
    V = R.vertices
    facet_sets = []
    for a, b in R.ineqs:
        s = frozenset(v for v in V if dot(a, v) == b)
        facet_sets.append(s)
    faces = {frozenset(V)}
    frontier = set(facet_sets)
    while frontier:
        faces |= frontier
        new = set()
        for f in frontier:
            for s in facet_sets:
                t = f & s
                if t and t not in faces:
                    new.add(t)
        frontier = new
    return faces


def _affine_dim(pts):
    pts = list(pts)
    p0 = pts[0]
    return rank([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]) if len(pts) > 1 else 0


def _closed_set_cohomology(P, g, eps):
    d = P.dim
    if d == 0:
        inside = any(k <= -eps for c, k in g)
        return BettiTable({}) if inside else BettiTable({-1: 1})
    # P in chart coordinates
    base = [(tuple(-x for x in c), k) for c, k in _restricted(P, P.ineqs)]  # c'.y <= k  <=>  k - c.y >= 0 ... see below
    # _restricted gives value(y) = k - c.y with constraint a.x <= b  <=>  value >= 0  <=>  c.y <= k
    base = [(c, k) for c, k in _restricted(P, P.ineqs)]
    region0 = Polyhedron.from_hrep(base, ambient=d, bounded=True)
    regions = [region0]
    cuts = [(c, k + eps) for c, k in g if any(c)]  # h(y) = k + eps - c.y ; zero set is phi = -eps
    for c, k in cuts:
        nxt = []
        for R in regions:
            s = [k - dot(c, v) for v in R.vertices]
            if min(s) < 0 < max(s):
                lo = Polyhedron.from_hrep(R.ineqs + ((c, k),), ambient=d, bounded=True)
                hi = Polyhedron.from_hrep(R.ineqs + ((tuple(-x for x in c), -k),), ambient=d, bounded=True)
                nxt += [lo, hi]
            else:
                nxt.append(R)
        regions = nxt
    cells = set()
    for R in regions:
        cells |= _faces_of_region(R)

    def in_closed_set(cell):
        n = len(cell)
        bary = tuple(sum(v[i] for v in cell) / n for i in range(d))
        return any(k - dot(c, bary) <= -eps for c, k in g)

    keep = [c for c in cells if in_closed_set(c)]
    if not keep:
        return BettiTable({-1: 1})
    dims = {c: _affine_dim(c) for c in keep}
    order = sorted(keep, key=lambda c: (dims[c], sorted(c)))
    idx = {c: i for i, c in enumerate(order)}
    up = {c: [e for e in keep if dims[e] == dims[c] + 1 and c < e] for c in keep}
    flags = []

    def walk(chain):
        last = chain[-1]
        if not up[last]:
            flags.append(tuple(idx[c] for c in chain))
            return
        for e in up[last]:
            walk(chain + [e])

    for c in keep:
        if dims[c] == 0:
            walk([c])
    K = SimplicialComplex(len(order), tuple(flags))
    return reduced_cohomology(K)


def shifted_complement_cohomology_oracle(P, Q, m=None, max_halvings=8):
    m = m or (0,) * P.ambient
    rows = [(a, b + dot(a, m)) for a, b in Q.le_rows()]
    g = _restricted(P, rows)  # phi_i(y) = k - c.y
    delta = _arrangement_delta(P, g)
    eps = delta / 2
    top = P.dim
    prev = _closed_set_cohomology(P, g, eps)
    for _ in range(max_halvings):
        eps /= 2
        cur = _closed_set_cohomology(P, g, eps)
        if cur == prev:
            return BettiTable({p: v for p, v in cur.entries.items() if p <= top})
        prev = cur
    raise StructuralError("epsilon-shift cohomology did not stabilize")
