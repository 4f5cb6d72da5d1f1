"""Ext tables between nef line bundles from set-difference cohomology."""
from __future__ import annotations

import itertools
from math import ceil, floor

from ..ratgeom import translate_containments
from .simplicial import BettiTable
from .nerve import PairData, cover_cohomology, set_difference_cohomology


def translation_range(P, Q):
    """Integer points of the bounding box of P - Q (every m with P meeting Q+m)."""
    PV, QV = P.vertices, Q.vertices
    ranges = []
    for j in range(P.ambient):
        lo = min(v[j] for v in PV) - max(v[j] for v in QV)
        hi = max(v[j] for v in PV) - min(v[j] for v in QV)
        ranges.append(range(ceil(lo), floor(hi) + 1))
    return itertools.product(*ranges)


def ext_table(P, Q, equivariant=False, lattice=None) -> BettiTable:
    """Ext^p(L_P, L_Q) = sum over m of H~^{p-1}(P minus (Q+m))."""
    if equivariant:
        h = set_difference_cohomology(P, Q)
        return BettiTable({p + 1: d for p, d in h.entries.items()}, kind="ext_equivariant")
    contained = {tuple(-x for x in t) for t in translate_containments(P, Q)}
    data = PairData(P, Q)
    out = {}
    for m in translation_range(P, Q):
        if lattice is not None and not lattice.contains(m):
            continue
        if m in contained:
            out[(m, 0)] = 1
            continue
        h = cover_cohomology(data.cover(m))
        if h[-1]:
            raise AssertionError("containment missed by the translate scan")
        for p, d in h.entries.items():
            out[(m, p + 1)] = d
    return BettiTable(out, kind="ext")
