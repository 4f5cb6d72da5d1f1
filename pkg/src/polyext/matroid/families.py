"""Set families on [n] = {1..n} stored as bitmasks (bit i-1 <-> element i)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError
from ..ratgeom import Polyhedron

MAX_N = 16


def mask_of(elems) -> int:
    m = 0
    for e in elems:
        if not isinstance(e, int) or e < 1:
            raise InputError(f"ground-set elements are positive integers, got {e!r}")
        m |= 1 << (e - 1)
    return m


def elems_of(mask) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(m) -> int:
    return bin(m).count("1")


def indicator(mask, n) -> tuple:
    return tuple((mask >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class SetFamily:
    n: int
    sets: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise InputError(f"ground-set size must lie in [0, {MAX_N}]")
        s = tuple(sorted(set(int(m) for m in self.sets)))
        if any(m < 0 or m >= (1 << self.n) for m in s):
            raise InputError("set mask outside the ground set")
        object.__setattr__(self, "sets", s)

    @classmethod
    def from_lists(cls, n, lists):
        return cls(n, tuple(mask_of(l) for l in lists))

    def as_lists(self):
        return [list(elems_of(m)) for m in self.sets]

    def __len__(self):
        return len(self.sets)

    def __contains__(self, m):
        return m in self._set

    @property
    def _set(self):
        try:
            return self.__dict__["_s"]
        except KeyError:
            s = frozenset(self.sets)
            object.__setattr__(self, "_s", s)
            return s


def is_matroid(f: SetFamily) -> bool:
    """Basis-exchange axiom, brute force."""
    if not f.sets:
        return False
    sizes = {popcount(m) for m in f.sets}
    if len(sizes) != 1:
        return False
    S = f._set
    for a in f.sets:
        for b in f.sets:
            d = a & ~b
            while d:
                e = d & -d
                d ^= e
                opts = b & ~a
                ok = False
                while opts:
                    g = opts & -opts
                    opts ^= g
                    if (a ^ e | g) in S:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def is_delta_matroid(f: SetFamily) -> bool:
    """Symmetric exchange axiom, brute force."""
    if not f.sets:
        return False
    S = f._set
    for a in f.sets:
        for b in f.sets:
            diff = a ^ b
            d = diff
            while d:
                e = d & -d
                d ^= e
                ok = False
                opts = diff
                while opts:
                    g = opts & -opts
                    opts ^= g
                    if (a ^ (e | g)) in S:
                        ok = True
                        break
                if not ok:
                    return False
    return True


@dataclass(frozen=True)
class Matroid:
    family: SetFamily

    def __post_init__(self):
        if not is_matroid(self.family):
            raise InputError("bases violate the basis-exchange axiom")

    @classmethod
    def from_bases(cls, n, bases):
        return cls(SetFamily.from_lists(n, bases))

    @classmethod
    def from_masks(cls, n, masks):
        return cls(SetFamily(n, tuple(masks)))

    @classmethod
    def uniform(cls, k, n):
        return cls.from_masks(n, [mask_of(c) for c in itertools.combinations(range(1, n + 1), k)])

    @property
    def n(self):
        return self.family.n

    @property
    def bases(self):
        return self.family.sets

    @property
    def rank(self):
        return popcount(self.bases[0])

    def rank_of(self, mask) -> int:
        return max(popcount(mask & b) for b in self.bases)

    def rank_function(self):
        return SubmodularFn(self.n, tuple(Fraction(self.rank_of(A)) for A in range(1 << self.n)))

    def independent_sets(self):
        out = set()
        for b in self.bases:
            sub = b
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return sorted(out)

    @property
    def loops(self) -> int:
        u = 0
        for b in self.bases:
            u |= b
        return ((1 << self.n) - 1) & ~u

    @property
    def coloops(self) -> int:
        c = (1 << self.n) - 1
        for b in self.bases:
            c &= b
        return c

    def sort_key(self):
        return (self.rank, self.bases)

    def to_json(self):
        return {"n": self.n, "bases": self.family.as_lists()}

    def __repr__(self):
        return f"Matroid(n={self.n}, bases={self.family.as_lists()})"


@dataclass(frozen=True)
class DeltaMatroid:
    family: SetFamily

    def __post_init__(self):
        if not is_delta_matroid(self.family):
            raise InputError("feasible sets violate symmetric exchange")

    @classmethod
    def from_feasible(cls, n, sets):
        return cls(SetFamily.from_lists(n, sets))

    @property
    def n(self):
        return self.family.n

    @property
    def feasible(self):
        return self.family.sets

    @property
    def loops(self) -> int:
        u = 0
        for b in self.feasible:
            u |= b
        return ((1 << self.n) - 1) & ~u

    @property
    def coloops(self) -> int:
        c = (1 << self.n) - 1
        for b in self.feasible:
            c &= b
        return c

    def sort_key(self):
        return (len(self.feasible), self.feasible)

    def to_json(self):
        return {"n": self.n, "feasible": self.family.as_lists()}

    def __repr__(self):
        return f"DeltaMatroid(n={self.n}, feasible={self.family.as_lists()})"


@dataclass(frozen=True)
class SubmodularFn:
    """mu : 2^[n] -> Q indexed by bitmask."""

    n: int
    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise InputError("need 2^n values")
        if vals[0] != 0:
            raise InputError("mu(empty) must be 0")
        object.__setattr__(self, "values", vals)

    def __call__(self, mask):
        return self.values[mask]

    def is_submodular(self) -> bool:
        v = self.values
        N = 1 << self.n
        return all(v[a] + v[b] >= v[a & b] + v[a | b] for a in range(N) for b in range(N))

    def is_monotone(self) -> bool:
        v = self.values
        return all(v[a] <= v[a | (1 << i)] for a in range(1 << self.n) for i in range(self.n))

    def __add__(self, other):
        if other.n != self.n:
            raise InputError("ground sets differ")
        return SubmodularFn(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def greedy_vertex(self, order):
        """Vertex of B(mu) maximizing a functional decreasing along `order` (0-based)."""
        x = [Fraction(0)] * self.n
        m = 0
        for i in order:
            x[i] = self.values[m | (1 << i)] - self.values[m]
            m |= 1 << i
        return tuple(x)


def base_polytope_mu(mu: SubmodularFn) -> Polyhedron:
    """B(mu), via the greedy vertices (one per ordering of the ground set)."""
    pts = {mu.greedy_vertex(p) for p in itertools.permutations(range(mu.n))}
    return Polyhedron.from_vertices(pts, ambient=mu.n)


def base_polytope(M: Matroid) -> Polyhedron:
    return Polyhedron.from_vertices([indicator(b, M.n) for b in M.bases], ambient=M.n)


def independence_polytope(M) -> Polyhedron:
    """IP of a matroid, or the polymatroid polytope {x >= 0, x(A) <= mu(A)}."""
    if isinstance(M, Matroid):
        return Polyhedron.from_vertices([indicator(s, M.n) for s in M.independent_sets()], ambient=M.n)
    mu = M
    if not mu.is_monotone():
        raise InputError("independence polytope needs a monotone function")
    n = mu.n
    rows = [(tuple(-1 if j == i else 0 for j in range(n)), 0) for i in range(n)]
    for A in range(1, 1 << n):
        rows.append((indicator(A, n), mu(A)))
    return Polyhedron.from_hrep(rows, ambient=n, bounded=True)


def feasible_polytope(D: DeltaMatroid) -> Polyhedron:
    return Polyhedron.from_vertices([indicator(s, D.n) for s in D.feasible], ambient=D.n)
