"""Constructors: subdivision Koszul, Brianchon-Gram and truncated BG complexes,
tensoring/truncation, and indicator-function bookkeeping."""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from ..errors import InputError, UnsupportedError
from ..ratgeom import Polyhedron, FanFamily, in_deformation_cone, minkowski_sum, minkowski_difference
from ..ratgeom.linalg import primitive, vec
from .poset import boolean_poset, fan_face_poset, chain_pair
from .complex import IEComplex


def covers_by_sampling(pieces, P, refine=2) -> bool:
    """Every point of (1/refine)Z^n in P, and every vertex of P, lies in a piece."""
    pts = [tuple(Fraction(x, refine) for x in p) for p in P.scale(refine).lattice_points()]
    pts += P.vertices
    return all(any(Q.contains(p) for Q in pieces) for p in pts)


def subdivision_koszul(pieces, P, refine=2, name="koszul"):
    pieces = list(pieces)
    if not pieces:
        raise InputError("need at least one piece")
    for Q in pieces:
        if Q.ambient != P.ambient:
            raise InputError("ambient dimension mismatch")
        if not P.contains_polytope(Q):
            raise InputError("a piece sticks out of the target")
    if not covers_by_sampling(pieces, P, refine):
        raise InputError("pieces do not cover the target")
    k = len(pieces)
    poset = _boolean(k)
    full = frozenset(range(k))
    inter = {frozenset(): None}
    for size in range(1, k + 1):
        for T in itertools.combinations(range(k), size):
            T = frozenset(T)
            rest = T - {max(T)}
            prev = inter.get(rest)
            if rest and (prev is None or prev.is_empty):
                continue
            inter[T] = pieces[max(T)] if not rest else prev.intersect(pieces[max(T)])
    labels = []
    for S in poset.elements:
        if S == full:
            labels.append(P)
        else:
            L = inter.get(full - S)
            labels.append(L if L is not None else Polyhedron.empty(P.ambient))
    return IEComplex(poset, labels, name=name)


@lru_cache(maxsize=None)
def _boolean(k):
    return boolean_poset(k)


@lru_cache(maxsize=None)
def _fan_poset(family):
    return fan_face_poset(family.fan(), opposite=True)


def tangent_cone(P, gens, lineality):
    """a + dual cone: {x : g.(x - a) >= 0 for g in gens, l.(x - a) = 0 for l in lineality},
    where a is the lex-smallest vertex of P minimizing the sum of the generators."""
    n = P.ambient
    w = [sum(g[j] for g in gens) for j in range(n)]
    best = min(sum(x * y for x, y in zip(w, v)) for v in P.vertices)
    a = min(v for v in P.vertices if sum(x * y for x, y in zip(w, v)) == best)
    ineqs = sorted({primitive(vec([-x for x in g]), -sum(x * y for x, y in zip(g, a))) for g in gens})
    eqs = []
    for l in lineality[:1] if lineality else ():
        eqs.append(primitive(vec(l), sum(x * y for x, y in zip(l, a))))
    # make sure redundant lineality generators are represented once
    for l in lineality[1:]:
        if tuple(-x for x in l) != tuple(lineality[0]):
            eqs.append(primitive(vec(l), sum(x * y for x, y in zip(l, a))))
    C = Polyhedron(n, tuple(ineqs), tuple(sorted(set(eqs))), False)
    if not C.contains_polytope(P):
        raise AssertionError("tangent cone misses P")
    return C


def brianchon_gram(P, family: FanFamily):
    if not in_deformation_cone(P, family):
        raise InputError(f"polytope is not in Def({family})")
    fan = family.fan()
    poset = _fan_poset(family)
    labels = [P]
    for cone in poset.elements[1:]:
        labels.append(tangent_cone(P, fan.generators(cone), fan.lineality))
    return IEComplex(poset, labels, name=f"BG[{family}]")


def truncated_bg(P, Q, family: FanFamily, check_labels=True):
    if not Q.contains_polytope(P):
        raise InputError("truncating polytope must contain P")
    bg = brianchon_gram(P, family)
    labels = [P]
    for L in bg.labels[1:]:
        T = L.intersect(Q)
        if check_labels and not T.is_empty and not in_deformation_cone(T, family):
            raise InputError("truncation leaves the deformation cone")
        labels.append(T)
    return IEComplex(bg.poset, labels, name=f"TBG[{family}]")


def tensor_translate(c: IEComplex, by, direction="add"):
    if direction not in ("add", "subtract"):
        raise InputError("direction is add or subtract")
    labels = []
    for L in c.labels:
        if L is None or L.is_empty:
            labels.append(L)
            continue
        if not isinstance(by, Polyhedron):
            t = vec(by)
            labels.append(L.translate(t if direction == "add" else tuple(-x for x in t)))
            continue
        if not L.bounded:
            raise UnsupportedError("Minkowski sums with unbounded labels are not supported")
        if direction == "add":
            labels.append(minkowski_sum(L, by))
        else:
            R = minkowski_difference(L, by)
            if R.is_empty or minkowski_sum(R, by) != L:
                raise InputError("polytope is not a Minkowski summand of a label")
            labels.append(R)
    return IEComplex(c.poset, labels, name=f"{c.name}(x)")


def truncate_complex(c: IEComplex, Q, family=None):
    labels = []
    for L in c.labels:
        if L is None or L.is_empty:
            labels.append(L)
            continue
        T = L.intersect(Q)
        if family is not None and not T.is_empty and not in_deformation_cone(T, family):
            raise InputError("truncation leaves the deformation cone")
        labels.append(T)
    return IEComplex(c.poset, labels, name=f"{c.name}|trunc")


def two_chain(small, big):
    """The complex L_small -> L_big on the 2-chain."""
    return IEComplex(chain_pair(), [small, big], name="2-chain")


class IndicatorExpr:
    """Formal integer combination of indicator functions of polytopes."""

    def __init__(self, terms=()):
        acc = {}
        order = []
        for coef, P in terms:
            if P.is_empty or coef == 0:
                continue
            if P not in acc:
                acc[P] = 0
                order.append(P)
            acc[P] += coef
        self.terms = [(acc[P], P) for P in order if acc[P] != 0]

    def __call__(self, x):
        return sum(c for c, P in self.terms if P.contains(x))

    evaluate = __call__

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "IndicatorExpr(" + " ".join(f"{c:+d}*{P!r}" for c, P in self.terms) + ")"


def alternating_indicator(c: IEComplex, skip_bottom=True):
    """1_{label(bottom)} = sum over the other alive x of (-1)^(rk x + 1) 1_{label(x)}
    for an exact complex."""
    terms = []
    for i in c.alive:
        if skip_bottom and i == c.poset.bottom:
            continue
        r = c.poset.rank[i]
        terms.append(((-1) ** (r + 1), c.labels[i]))
    return IndicatorExpr(terms)


def derksen_fink_decompose(M):
    from ..matroid import base_polytope, Matroid

    if not isinstance(M, Matroid):
        raise InputError("expected a Matroid")
    P = base_polytope(M)
    Q = base_polytope(Matroid.uniform(M.rank, M.n))
    c = truncated_bg(P, Q, FanFamily("BraidA", M.n), check_labels=False)
    return alternating_indicator(c)
