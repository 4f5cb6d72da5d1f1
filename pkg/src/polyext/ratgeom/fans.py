"""The named fan families: admissible edge directions and combinatorial cones."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from ..errors import InputError, UnsupportedError

TAGS = ("BraidA", "Stellahedral", "TypeB", "ProductP1", "Custom")


def _unit(n, i, s=1):
    return tuple(s if j == i else 0 for j in range(n))


def _canon_dir(d):
    """Primitive integer representative of the line spanned by d, sign-normalized."""
    den = 1
    for x in d:
        x = x if hasattr(x, "denominator") else x
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise InputError("zero direction")
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Fan:
    """A simplicial fan given by rays, a lineality space and cones as ray-index sets."""

    rays: tuple
    lineality: tuple
    cones: tuple  # frozensets of ray indices, sorted by (size, indices)

    @property
    def max_dim(self):
        return max(len(c) for c in self.cones)

    def generators(self, cone):
        return [self.rays[i] for i in sorted(cone)]


@dataclass(frozen=True)
class FanFamily:
    tag: str
    n: int
    directions: tuple = field(default=())

    def __post_init__(self):
        if self.tag not in TAGS:
            raise InputError(f"unknown fan family {self.tag!r}")
        if self.n < 0:
            raise InputError("negative ground-set size")
        if self.tag == "Custom":
            dirs = tuple(tuple(int(x) for x in d) for d in self.directions)
            if any(len(d) != self.n for d in dirs):
                raise InputError("custom directions must have length n")
            object.__setattr__(self, "directions", dirs)

    @classmethod
    def custom(cls, directions):
        directions = [tuple(d) for d in directions]
        if not directions:
            raise InputError("custom fan needs at least one direction")
        return cls("Custom", len(directions[0]), tuple(directions))

    def __str__(self):
        return f"{self.tag}({self.n})" if self.tag != "Custom" else f"Custom({list(self.directions)})"

    def edge_directions(self):
        """Admissible edge directions, closed under negation."""
        n = self.n
        out = set()
        if self.tag in ("BraidA", "Stellahedral", "TypeB"):
            for i, j in itertools.permutations(range(n), 2):
                out.add(tuple(_unit(n, i)[k] - _unit(n, j)[k] for k in range(n)))
        if self.tag in ("Stellahedral", "TypeB", "ProductP1"):
            for i in range(n):
                out.add(_unit(n, i))
                out.add(_unit(n, i, -1))
        if self.tag == "TypeB":
            for i, j in itertools.permutations(range(n), 2):
                for s in (1, -1):
                    v = tuple(s * (_unit(n, i)[k] + _unit(n, j)[k]) for k in range(n))
                    out.add(v)
        if self.tag == "Custom":
            for d in self.directions:
                out.add(tuple(d))
                out.add(tuple(-x for x in d))
        return sorted(out)

    def _canonical_lines(self):
        return {_canon_dir(d) for d in self.edge_directions()}

    def fan(self) -> Fan:
        if self.tag == "Custom":
            raise UnsupportedError("custom families carry edge directions only, no cones")
        return _build_fan(self.tag, self.n)


def in_deformation_cone(P, fan: FanFamily) -> bool:
    """Normal fan of P coarsens the family's fan.

    Edge directions give a fast rejection; for families with cones we then check
    that every maximal cone sits inside a single (inner) normal cone of P."""
    if not P.bounded:
        raise UnsupportedError("deformation-cone test needs a bounded polytope")
    if P.is_empty:
        raise InputError("empty polytope")
    if P.ambient != fan.n:
        raise InputError("ambient dimension does not match the fan")
    if not P.is_integral():
        raise InputError("deformation-cone test needs integral vertices")
    lines = fan._canonical_lines()
    if not all(_canon_dir(d) in lines for d in P.edge_directions()):
        return False
    if fan.tag == "Custom":
        return True
    F = fan.fan()
    V = P.vertices

    def ev(g, v):
        return sum(x * y for x, y in zip(g, v))

    for l in F.lineality:
        if len({ev(l, v) for v in V}) > 1:
            return False
    top = F.max_dim
    for cone in F.cones:
        if len(cone) != top:
            continue
        gens = F.generators(cone)
        w = [sum(g[j] for g in gens) for j in range(fan.n)]
        v = min(V, key=lambda u: ev(w, u))
        if any(ev(g, v) != min(ev(g, u) for u in V) for g in gens):
            return False
    return True


def _chains(elements, lt):
    """All chains (sorted increasing), including the empty chain."""
    elements = list(elements)
    out = [()]

    def ext(chain):
        last = chain[-1]
        for e in elements:
            if lt(last, e):
                c = chain + (e,)
                out.append(c)
                ext(c)

    for e in elements:
        out.append((e,))
        ext((e,))
    return out


@lru_cache(maxsize=None)
def _build_fan(tag, n):
    full = frozenset(range(n))
    if tag == "BraidA":
        subsets = [frozenset(c) for k in range(1, n) for c in itertools.combinations(range(n), k)]
        rays = [tuple(1 if i in S else 0 for i in range(n)) for S in subsets]
        idx = {S: i for i, S in enumerate(subsets)}
        cones = [frozenset(idx[S] for S in ch) for ch in _chains(subsets, lambda a, b: a < b)]
        ones = tuple([1] * n)
        lineality = (ones, tuple([-1] * n)) if n else ()
    elif tag == "Stellahedral":
        proper = [frozenset(c) for k in range(0, n) for c in itertools.combinations(range(n), k)]
        rays = [_unit(n, i) for i in range(n)]
        rays += [tuple(-1 if i not in F else 0 for i in range(n)) for F in proper]
        fidx = {F: n + i for i, F in enumerate(proper)}
        cones = []
        for ch in _chains(proper, lambda a, b: a < b):
            top = ch[0] if ch else full
            for k in range(len(top) + 1):
                for I in itertools.combinations(sorted(top), k):
                    cones.append(frozenset(I) | frozenset(fidx[F] for F in ch))
        lineality = ()
    elif tag == "TypeB":
        signed = []
        for signs in itertools.product((0, 1, -1), repeat=n):
            if any(signs):
                signed.append(frozenset((i, s) for i, s in enumerate(signs) if s))
        rays = []
        for T in signed:
            v = [0] * n
            for i, s in T:
                v[i] = s
            rays.append(tuple(v))
        idx = {T: i for i, T in enumerate(signed)}
        cones = [frozenset(idx[T] for T in ch) for ch in _chains(signed, lambda a, b: a < b)]
        lineality = ()
    elif tag == "ProductP1":
        rays = []
        for i in range(n):
            rays.append(_unit(n, i))
            rays.append(_unit(n, i, -1))
        cones = []
        for choice in itertools.product((None, 0, 1), repeat=n):
            cones.append(frozenset(2 * i + c for i, c in enumerate(choice) if c is not None))
        lineality = ()
    else:
        raise UnsupportedError(tag)
    cones = sorted(set(cones), key=lambda c: (len(c), sorted(c)))
    return Fan(tuple(rays), lineality, tuple(cones))
