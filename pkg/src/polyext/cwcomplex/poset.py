"""Graded thin posets with a bottom element and cover signs."""
from __future__ import annotations

import itertools
from collections import defaultdict

from ..errors import InputError


class CWPoset:
    """Ranked poset given by its cover relations.

    elements: list of hashable names; covers: list of (lower, upper) index
    pairs; rank: list of ints with the unique bottom at rank 0.
    """

    def __init__(self, elements, covers, kind="Custom", signs=None, validate=True):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise InputError("duplicate poset elements")
        self.covers = sorted(set((int(a), int(b)) for a, b in covers))
        self.kind = kind
        self.up = defaultdict(list)
        self.down = defaultdict(list)
        for a, b in self.covers:
            self.up[a].append(b)
            self.down[b].append(a)
        bottoms = [i for i in range(len(self.elements)) if not self.down[i]]
        if len(bottoms) != 1:
            raise InputError(f"poset needs a unique bottom, found {len(bottoms)} minimal elements")
        self.bottom = bottoms[0]
        self.rank = self._ranks()
        if validate:
            self.validate()
        self.signs = signs if signs is not None else incidence_signs(self)

    def __len__(self):
        return len(self.elements)

    def _ranks(self):
        rank = [None] * len(self.elements)
        rank[self.bottom] = 0
        frontier = [self.bottom]
        while frontier:
            nxt = []
            for a in frontier:
                for b in self.up[a]:
                    r = rank[a] + 1
                    if rank[b] is None:
                        rank[b] = r
                        nxt.append(b)
                    elif rank[b] != r:
                        raise InputError("poset is not graded")
            frontier = nxt
        if any(r is None for r in rank):
            raise InputError("poset has elements unreachable from the bottom")
        return rank

    def diamonds(self):
        """(x, z, [y1, y2, ...]) for every length-two interval."""
        out = []
        for x in range(len(self.elements)):
            mids = defaultdict(list)
            for y in self.up[x]:
                for z in self.up[y]:
                    mids[z].append(y)
            for z, ys in sorted(mids.items()):
                out.append((x, z, sorted(ys)))
        return out

    def validate(self):
        for x, z, ys in self.diamonds():
            if len(ys) != 2:
                raise InputError(f"poset is not thin: interval [{self.elements[x]}, {self.elements[z]}] has {len(ys)} middle elements")

    def leq_sets(self):
        """For each element the set of elements above or equal to it."""
        order = sorted(range(len(self.elements)), key=lambda i: -self.rank[i])
        above = {}
        for i in order:
            s = {i}
            for b in self.up[i]:
                s |= above[b]
            above[i] = frozenset(s)
        return [above[i] for i in range(len(self.elements))]

    def diamond_products_ok(self) -> bool:
        s = self.signs
        return all(s[(x, y1)] * s[(y1, z)] * s[(x, y2)] * s[(y2, z)] == -1 for x, z, (y1, y2) in self.diamonds())

    def to_json(self):
        return {
            "kind": self.kind,
            "elements": [str(e) for e in self.elements],
            "rank": self.rank,
            "covers": [[a, b, self.signs[(a, b)]] for a, b in self.covers],
        }


def incidence_signs(poset):
    """Cover signs with every diamond product -1; covers from the bottom get +1."""
    if poset.kind.startswith("Boolean"):
        out = {}
        for a, b in poset.covers:
            S, T = poset.elements[a], poset.elements[b]
            (i,) = T - S
            out[(a, b)] = -1 if sum(1 for j in S if j < i) % 2 else 1
        return out
    # GF(2) solve: bit 1 means sign -1
    var = {}
    for c in poset.covers:
        if c[0] != poset.bottom:
            var[c] = len(var)
    eqs = []
    for x, z, ys in poset.diamonds():
        if len(ys) != 2:
            raise InputError("sign system needs a thin poset")
        y1, y2 = ys
        row, rhs = 0, 1
        for c in ((x, y1), (y1, z), (x, y2), (y2, z)):
            if c in var:
                row ^= 1 << var[c]
        eqs.append((row, rhs))
    pivots = {}  # pivot bit -> (row, rhs)
    for row, rhs in eqs:
        for bit, (prow, prhs) in pivots.items():
            if row >> bit & 1:
                row ^= prow
                rhs ^= prhs
        if row == 0:
            if rhs:
                raise InputError("no diamond-consistent sign assignment exists")
            continue
        bit = row.bit_length() - 1
        for b2, (prow, prhs) in list(pivots.items()):
            if prow >> bit & 1:
                pivots[b2] = (prow ^ row, prhs ^ rhs)
        pivots[bit] = (row, rhs)
    value = [0] * len(var)
    for bit, (row, rhs) in pivots.items():
        # free variables are 0, so the pivot takes the rhs
        value[bit] = rhs
    out = {}
    for c in poset.covers:
        out[c] = -1 if c in var and value[var[c]] else 1
    return out


def boolean_poset(k):
    elems = [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)]
    idx = {e: i for i, e in enumerate(elems)}
    covers = [(idx[S], idx[S | {i}]) for S in elems for i in range(k) if i not in S]
    return CWPoset(elems, covers, kind=f"Boolean({k})", validate=False)


def chain_pair():
    """The 2-chain 0 < a."""
    return CWPoset(["0", "a"], [(0, 1)], kind="ChainPair")


def face_lattice(P):
    """Faces of a polytope (as vertex-index sets) with the empty face at the bottom."""
    V = P.vertices
    facet_sets = []
    for a, b in P.ineqs:
        facet_sets.append(frozenset(i for i, v in enumerate(V) if sum(x * y for x, y in zip(a, v)) == b))
    faces = {frozenset(range(len(V)))}
    frontier = set(facet_sets)
    while frontier:
        faces |= frontier
        frontier = {f & s for f in frontier for s in facet_sets} - faces
    faces.add(frozenset())
    faces |= {frozenset([i]) for i in range(len(V))}
    elems = sorted(faces, key=lambda f: (len(f), sorted(f)))
    from ..ratgeom.linalg import rank as _rank

    def fdim(f):
        if not f:
            return -1
        f = sorted(f)
        return _rank([tuple(a - b for a, b in zip(V[i], V[f[0]])) for i in f[1:]]) if len(f) > 1 else 0

    dims = {f: fdim(f) for f in elems}
    idx = {f: i for i, f in enumerate(elems)}
    covers = [(idx[f], idx[g]) for f in elems for g in elems if f < g and dims[g] == dims[f] + 1]
    return CWPoset(elems, covers, kind="FaceLattice")


def fan_face_poset(fan, opposite=True):
    """Cones of a simplicial fan plus an adjoined top; opposite order by default,
    so the adjoined element is the bottom and maximal cones sit at rank one."""
    top = "1"
    cones = list(fan.cones)
    elems = [top] + cones
    idx = {c: i + 1 for i, c in enumerate(cones)}
    dmax = fan.max_dim
    covers = []
    for c in cones:
        if len(c) == dmax:
            covers.append((0, idx[c]) if opposite else (idx[c], 0))
        for r in c:
            sub = c - {r}
            if opposite:
                covers.append((idx[c], idx[sub]))
            else:
                covers.append((idx[sub], idx[c]))
    return CWPoset(elems, covers, kind="FanFacePoset" + ("Opposite" if opposite else ""), validate=True)
