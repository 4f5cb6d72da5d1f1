"""Inclusion-exclusion complexes of polytope-labelled line bundles and their T-stalks."""
from __future__ import annotations

import itertools
from math import ceil, floor

from ..errors import StructuralError, InputError
from ..ratgeom.linalg import int_rank


class IEComplex:
    """A CW poset with an order-preserving polytope labelling.

    Elements whose label is empty are pruned: they carry the zero object.
    Degree of an element is its rank.
    """

    def __init__(self, poset, labels, name=""):
        if len(labels) != len(poset):
            raise InputError("one label per poset element")
        self.poset = poset
        self.labels = list(labels)
        self.name = name
        self.alive = [i for i, L in enumerate(self.labels) if L is not None and not L.is_empty]
        self._alive = set(self.alive)

    @property
    def ambient(self):
        return self.labels[self.alive[0]].ambient if self.alive else None

    def terms(self):
        """Degree -> number of nonzero terms."""
        out = {}
        for i in self.alive:
            r = self.poset.rank[i]
            out[r] = out.get(r, 0) + 1
        return dict(sorted(out.items()))

    def check_order_preserving(self):
        for a, b in self.poset.covers:
            if a in self._alive and b in self._alive:
                La, Lb = self.labels[a], self.labels[b]
                if La.bounded and not Lb.contains_polytope(La):
                    raise StructuralError(f"labels not order-preserving at cover {a}<{b}")
                if not La.bounded and not Lb.bounded and not _cone_contains(Lb, La):
                    raise StructuralError(f"labels not order-preserving at cover {a}<{b}")
        return True

    def check_d_squared(self):
        """Every component of d o d between alive x < z (rank gap 2) vanishes."""
        s = self.poset.signs
        for x, z, ys in self.poset.diamonds():
            if x in self._alive and z in self._alive:
                tot = sum(s[(x, y)] * s[(y, z)] for y in ys if y in self._alive)
                if tot != 0:
                    raise StructuralError(f"d^2 != 0 between {self.poset.elements[x]} and {self.poset.elements[z]}")
        return True

    def support_of(self, m):
        return [i for i in self.alive if self.labels[i].contains(m)]

    def stalk_complex(self, m):
        """(dims by degree, differential matrices) of the stalk at m."""
        I = self.support_of(m)
        Iset = set(I)
        by_rank = {}
        for i in I:
            by_rank.setdefault(self.poset.rank[i], []).append(i)
        mats = {}
        s = self.poset.signs
        for r, xs in by_rank.items():
            ys = by_rank.get(r + 1, [])
            col = {y: k for k, y in enumerate(ys)}
            rows = []
            for x in xs:
                row = [0] * len(ys)
                for y in self.poset.up[x]:
                    if y in Iset:
                        row[col[y]] = s[(x, y)]
                rows.append(row)
            mats[r] = rows
        return I, by_rank, mats

    def stalk_report(self, m):
        I, by_rank, mats = self.stalk_complex(m)
        ranks = {r: int_rank(M) if M and M[0] else 0 for r, M in mats.items()}
        exact = all(len(xs) == ranks.get(r, 0) + ranks.get(r - 1, 0) for r, xs in by_rank.items())
        euler = sum((-1) ** r * len(xs) for r, xs in by_rank.items())
        return {
            "m": list(m),
            "dims": {r: len(xs) for r, xs in sorted(by_rank.items())},
            "exact": exact,
            "interval": self._is_interval(I),
            "euler": euler,
        }

    def _is_interval(self, I):
        if len(I) < 2:
            return False
        Iset = set(I)
        mins = [x for x in I if not any(d in Iset for d in self.poset.down[x])]
        maxs = [x for x in I if not any(u in Iset for u in self.poset.up[x])]
        if len(mins) != 1 or len(maxs) != 1:
            return False
        above = self._above()
        a, b = mins[0], maxs[0]
        interval = {x for x in above[a] if b in above[x]}
        return interval == Iset

    def _above(self):
        if not hasattr(self, "_above_cache"):
            self._above_cache = self.poset.leq_sets()
        return self._above_cache

    def default_points(self, margin=1):
        """Lattice points where some label may be nonzero.

        Bounded labels: their lattice points.  If unbounded labels are present,
        scan the bounding box of the bounded labels enlarged by `margin`."""
        bounded = [self.labels[i] for i in self.alive if self.labels[i].bounded]
        if len(bounded) == len(self.alive):
            pts = set()
            for L in bounded:
                pts.update(L.lattice_points())
            return sorted(pts)
        if not bounded:
            raise InputError("all labels unbounded; pass explicit points")
        n = bounded[0].ambient
        ranges = []
        for j in range(n):
            lo = min(v[j] for L in bounded for v in L.vertices) - margin
            hi = max(v[j] for L in bounded for v in L.vertices) + margin
            ranges.append(range(ceil(lo), floor(hi) + 1))
        return [p for p in itertools.product(*ranges) if self.support_of(p)]

    def to_json(self):
        from ..ratgeom.io import polyhedron_to_json
        return {
            "name": self.name,
            "poset": self.poset.to_json(),
            "labels": {str(i): polyhedron_to_json(self.labels[i]) for i in self.alive},
        }


def _cone_contains(A, B):
    # only used for sanity; unbounded containment needs LP per constraint
    from ..ratgeom.polyhedron import lp
    for a, b in A.le_rows():
        neg = tuple(-x for x in a)
        if lp.max_slack(list(B.le_rows()), [(neg, -b)], [], A.ambient) is not None:
            return False
    return True


def check_exactness_tstalks(c: IEComplex, points=None, margin=1):
    """Exactness of every stalk complex; returns (ok, report)."""
    c.check_d_squared()
    if points is None:
        points = c.default_points(margin)
    stalks = [c.stalk_report(tuple(m)) for m in points]
    ok = all(s["exact"] for s in stalks)
    report = {
        "exact": ok,
        "points": len(stalks),
        "all_intervals": all(s["interval"] for s in stalks),
        "terms": c.terms(),
        "failures": [s for s in stalks if not s["exact"]],
        "stalks": stalks,
    }
    for s in stalks:
        if s["interval"] and not s["exact"]:
            raise StructuralError("interval stalk failed the rank check")
        if s["exact"] and s["euler"] != 0:
            raise StructuralError("exact stalk with nonzero Euler characteristic")
    return ok, report
