"""Simplicial complexes and reduced cohomology over Q."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..ratgeom.linalg import int_rank


class BettiTable:
    """Nonzero graded dimensions.

    Keys are degrees p (cohomology / equivariant Ext) or pairs (m, p) for
    non-equivariant Ext tables, where m is the lattice translation.
    """

    def __init__(self, entries=None, kind="cohomology"):
        self.kind = kind
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.kind == other.kind and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({self.kind}, {dict(sorted(self.entries.items(), key=str))})"

    def degrees(self):
        return sorted({k if self.kind != "ext" else k[1] for k in self.entries})

    def totals(self):
        """Degree -> dimension, summed over translations for ext tables."""
        out = {}
        for k, v in self.entries.items():
            p = k[1] if self.kind == "ext" else k
            out[p] = out.get(p, 0) + v
        return dict(sorted(out.items()))

    def vanishes_from(self, p0) -> bool:
        return all(v == 0 for p, v in self.totals().items() if p >= p0)

    def to_json(self):
        if self.kind == "ext":
            rows = [{"m": list(m), "p": p, "dim": d} for (m, p), d in sorted(self.entries.items())]
            return {"ext": rows, "totals": [{"p": p, "dim": d} for p, d in self.totals().items()]}
        key = "ext" if self.kind == "ext_equivariant" else "cohomology"
        return {key: [{"p": p, "dim": d} for p, d in sorted(self.entries.items())]}


@dataclass(frozen=True)
class SimplicialComplex:
    num_vertices: int
    facets: tuple

    def __post_init__(self):
        fs = {frozenset(f) for f in self.facets}
        fs = [f for f in fs if not any(f < g for g in fs)]
        if any(v < 0 or v >= self.num_vertices for f in fs for v in f):
            raise ValueError("vertex index out of range")
        object.__setattr__(self, "facets", tuple(sorted(tuple(sorted(f)) for f in fs if f)))

    @classmethod
    def from_simplices(cls, num_vertices, simplices):
        return cls(num_vertices, tuple(simplices))

    @property
    def dim(self):
        return max((len(f) - 1 for f in self.facets), default=-1)

    def faces(self):
        """Dict dim -> sorted list of faces (tuples)."""
        out = {}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                for c in itertools.combinations(f, k):
                    out.setdefault(k - 1, set()).add(c)
        return {d: sorted(s) for d, s in out.items()}


def reduced_cohomology(K: SimplicialComplex) -> BettiTable:
    faces = K.faces()
    top = max(faces, default=-1)
    counts = {-1: 1}
    for d in range(top + 1):
        counts[d] = len(faces[d])
    ranks = {}  # ranks[d] = rank of boundary C_d -> C_{d-1}
    ranks[0] = 1 if counts.get(0, 0) else 0
    for d in range(1, top + 1):
        idx = {f: i for i, f in enumerate(faces[d - 1])}
        rows = []
        for f in faces[d]:
            row = [0] * len(idx)
            for i in range(len(f)):
                row[idx[f[:i] + f[i + 1:]]] = (-1) ** i
            rows.append(row)
        ranks[d] = int_rank(rows)
    ranks[top + 1] = 0
    out = {}
    for d in range(-1, top + 1):
        out[d] = counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return BettiTable(out)
