"""Exact rational polyhedra: H-representation plus cached V-representation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor, ceil, gcd

from ..errors import InputError, UnsupportedError
from .linalg import ZERO, frac, vec, dot, rref, rank, nullspace, solve, primitive
from . import lp

SENSES = ("<=", "<", "=")


@dataclass(frozen=True)
class AffineForm:
    """The constraint  a . x  (sense)  b."""

    a: tuple
    b: Fraction
    sense: str = "<="

    def __post_init__(self):
        object.__setattr__(self, "a", vec(self.a))
        object.__setattr__(self, "b", frac(self.b))
        if self.sense not in SENSES:
            raise InputError(f"unknown sense {self.sense!r}")
        if not any(self.a):
            raise InputError("trivial affine form (zero normal vector)")

    @property
    def dim(self):
        return len(self.a)

    def value(self, x):
        return dot(self.a, x)

    def holds(self, x) -> bool:
        v = dot(self.a, x)
        if self.sense == "<=":
            return v <= self.b
        if self.sense == "<":
            return v < self.b
        return v == self.b


def lp_feasible(forms):
    """Rational witness satisfying all forms (strict ones included), or None."""
    forms = list(forms)
    if not forms:
        raise InputError("no forms given; ambient dimension unknown")
    n = forms[0].dim
    if any(f.dim != n for f in forms):
        raise InputError("forms live in different ambient dimensions")
    le = [(f.a, f.b) for f in forms if f.sense == "<="]
    lt = [(f.a, f.b) for f in forms if f.sense == "<"]
    eq = [(f.a, f.b) for f in forms if f.sense == "="]
    w = lp.max_slack(le, lt, eq, n)
    if w is not None:
        assert all(f.holds(w) for f in forms)
    return w


class Lattice:
    """Full-rank sublattice of Z^n given by basis rows; None means Z^n."""

    def __init__(self, basis):
        self.basis = tuple(vec(b) for b in basis)
        n = len(self.basis)
        if n == 0 or any(len(b) != n for b in self.basis) or rank(self.basis) != n:
            raise InputError("lattice basis must be square and of full rank")
        if any(x.denominator != 1 for b in self.basis for x in b):
            raise InputError("lattice basis must be integral")
        self._cols = [tuple(self.basis[i][j] for i in range(n)) for j in range(n)]

    @classmethod
    def even(cls, n):
        """{x in Z^n : sum x even} (the type-C weight lattice convention)."""
        if n == 1:
            return cls([[2]])
        basis = []
        for i in range(n - 1):
            r = [0] * n
            r[i], r[i + 1] = 1, -1
            basis.append(r)
        r = [0] * n
        r[n - 2], r[n - 1] = 1, 1
        basis.append(r)
        return cls(basis)

    def contains(self, x) -> bool:
        c = solve(self._cols, vec(x))
        return c is not None and all(v.denominator == 1 for v in c)


def _as_int_points(points):
    den = 1
    for p in points:
        for x in p:
            den = den * x.denominator // gcd(den, x.denominator)
    return den, [tuple(int(x * den) for x in p) for p in points]


def _int_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _normal(diffs, d):
    """Integer normal to d-1 integer vectors in Z^d (generalized cross product)."""
    if d == 2:
        (x, y), = diffs
        return (y, -x)
    if d == 3:
        (a1, a2, a3), (b1, b2, b3) = diffs
        return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    out = []
    for i in range(d):
        minor = [[r[j] for j in range(d) if j != i] for r in diffs]
        out.append((-1) ** i * _int_det(minor))
    return tuple(out)


def _facets_full_dim(Y, d):
    """Facets of conv(Y) for integer points spanning Z^d affinely.

    Returns list of (c, val, tight_index_set) meaning c.y <= val.
    """
    N = len(Y)
    if d == 0:
        return []
    if d == 1:
        lo = min(y[0] for y in Y)
        hi = max(y[0] for y in Y)
        return [((-1,), -lo, frozenset(i for i, y in enumerate(Y) if y[0] == lo)),
                ((1,), hi, frozenset(i for i, y in enumerate(Y) if y[0] == hi))]
    facets = {}
    found_sets = []
    for comb in itertools.combinations(range(N), d):
        if any(set(comb) <= s for s in found_sets):
            continue
        y0 = Y[comb[0]]
        diffs = [tuple(a - b for a, b in zip(Y[k], y0)) for k in comb[1:]]
        c = _normal(diffs, d)
        if not any(c):
            continue
        val = sum(a * b for a, b in zip(c, y0))
        pos = neg = False
        tight = []
        for i, y in enumerate(Y):
            s = sum(a * b for a, b in zip(c, y)) - val
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                tight.append(i)
            if pos and neg:
                break
        if pos and neg:
            continue
        key = frozenset(tight)
        if key in facets:
            continue
        if pos:
            c = tuple(-x for x in c)
            val = -val
        g = 0
        for x in c:
            g = gcd(g, x)
        c = tuple(x // g for x in c)
        val = Fraction(val, g)
        facets[key] = (c, val, key)
        found_sets.append(key)
    return list(facets.values())


class Polyhedron:
    """Convex polyhedron {x : A x <= b, E x = e} in Q^n.

    Bounded polyhedra carry an exact vertex list; unbounded ones (tangent cones)
    only support membership and intersection with bounded polyhedra.
    """

    __slots__ = ("ambient", "ineqs", "eqs", "bounded", "is_empty", "_vertices", "__dict__")

    def __init__(self, ambient, ineqs, eqs, bounded, is_empty=False, vertices=None):
        self.ambient = ambient
        self.ineqs = tuple(ineqs)
        self.eqs = tuple(eqs)
        self.bounded = bounded
        self.is_empty = is_empty
        self._vertices = vertices

    # ---------- constructors
    @classmethod
    def empty(cls, n):
        return cls(n, (), (), True, True, ())

    @classmethod
    def from_vertices(cls, points, ambient=None):
        pts = sorted(set(vec(p) for p in points))
        if not pts:
            if ambient is None:
                raise InputError("empty vertex list without ambient dimension")
            return cls.empty(ambient)
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise InputError("points of different dimensions")
        if ambient is not None and ambient != n:
            raise InputError("ambient dimension mismatch")
        eqs, ineqs, verts = _hull(pts)
        return cls(n, ineqs, eqs, True, False, tuple(verts))

    @classmethod
    def from_hrep(cls, ineqs=(), eqs=(), ambient=None, bounded=None):
        ineqs = [(vec(a), frac(b)) for a, b in ineqs]
        eqs = [(vec(a), frac(b)) for a, b in eqs]
        rows = ineqs + eqs
        if ambient is None:
            if not rows:
                raise InputError("ambient dimension unknown")
            ambient = len(rows[0][0])
        if any(len(a) != ambient for a, _ in rows):
            raise InputError("constraint dimension mismatch")
        ineqs2 = []
        for a, b in ineqs:
            if not any(a):
                if b < 0:
                    return cls.empty(ambient)
                continue
            ineqs2.append(primitive(a, b))
        eqs2 = []
        for a, b in eqs:
            if not any(a):
                if b != 0:
                    return cls.empty(ambient)
                continue
            eqs2.append(primitive(a, b))
        if bounded is None:
            bounded = _is_bounded(ineqs2, eqs2, ambient)
        if not bounded:
            if lp.max_slack(ineqs2, [], eqs2, ambient) is None:
                return cls.empty(ambient)
            return cls(ambient, tuple(sorted(set(ineqs2))), tuple(sorted(set(eqs2))), False)
        verts = _enumerate_vertices(ineqs2, eqs2, ambient)
        if not verts:
            return cls.empty(ambient)
        return cls.from_vertices(verts)

    @classmethod
    def point(cls, p):
        return cls.from_vertices([p])

    @classmethod
    def cube(cls, n, lo=0, hi=1):
        return cls.from_vertices(itertools.product((lo, hi), repeat=n))

    @classmethod
    def simplex(cls, n, k=1):
        """k * conv(0, e_1, ..., e_n)."""
        pts = [[0] * n] + [[k if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_vertices(pts)

    # ---------- basic data
    def _need_bounded(self):
        if not self.bounded:
            raise UnsupportedError("operation needs a bounded polyhedron")

    @property
    def vertices(self):
        self._need_bounded()
        return list(self._vertices)

    @cached_property
    def dim(self):
        if self.is_empty:
            return -1
        self._need_bounded()
        return len(self.chart[2])

    @cached_property
    def chart(self):
        """(origin, direction rows, pivot coords): aff hull = origin + span(rows),
        and coordinate p -> x[pivots] is a bijective chart."""
        self._need_bounded()
        V = self._vertices
        p0 = V[0]
        D = [tuple(a - b for a, b in zip(v, p0)) for v in V[1:]]
        red, piv = rref(D, self.ambient) if D else ([], [])
        return p0, [tuple(r) for r in red], tuple(piv)

    def forms(self):
        """All constraints as AffineForms (equalities kept as '=')."""
        return [AffineForm(a, b, "<=") for a, b in self.ineqs] + [AffineForm(a, b, "=") for a, b in self.eqs]

    def le_rows(self):
        """Constraints as a list of (a, b) meaning a.x <= b, equalities split in two."""
        rows = list(self.ineqs)
        for a, b in self.eqs:
            rows.append((a, b))
            rows.append((tuple(-x for x in a), -b))
        return rows

    def contains(self, x) -> bool:
        if self.is_empty:
            return False
        x = vec(x)
        for a, b in self.eqs:
            if dot(a, x) != b:
                return False
        for a, b in self.ineqs:
            if dot(a, x) > b:
                return False
        return True

    def contains_relint(self, x) -> bool:
        if not self.contains(x):
            return False
        x = vec(x)
        return all(dot(a, x) < b for a, b in self.ineqs)

    def contains_polytope(self, other) -> bool:
        if other.is_empty:
            return True
        other._need_bounded()
        return all(self.contains(v) for v in other._vertices)

    def support(self, w):
        self._need_bounded()
        w = vec(w)
        return max(dot(w, v) for v in self._vertices)

    # ---------- operations
    def translate(self, t):
        t = vec(t)
        if len(t) != self.ambient:
            raise InputError("translation dimension mismatch")
        if self.is_empty:
            return self
        if self.bounded:
            return Polyhedron.from_vertices([tuple(a + b for a, b in zip(v, t)) for v in self._vertices])
        ineqs = [(a, b + dot(a, t)) for a, b in self.ineqs]
        eqs = [(a, b + dot(a, t)) for a, b in self.eqs]
        return Polyhedron(self.ambient, tuple(sorted(ineqs)), tuple(sorted(eqs)), False)

    def scale(self, k):
        self._need_bounded()
        k = frac(k)
        if self.is_empty:
            return self
        return Polyhedron.from_vertices([tuple(k * x for x in v) for v in self._vertices])

    def map_points(self, f):
        """Image under an affine map given as a python function on points."""
        self._need_bounded()
        if self.is_empty:
            return self
        return Polyhedron.from_vertices([f(v) for v in self._vertices])

    def __neg__(self):
        return self.map_points(lambda v: tuple(-x for x in v))

    def intersect(self, other):
        if self.ambient != other.ambient:
            raise InputError("ambient dimension mismatch")
        if self.is_empty or other.is_empty:
            return Polyhedron.empty(self.ambient)
        bounded = self.bounded or other.bounded
        return Polyhedron.from_hrep(self.ineqs + other.ineqs, self.eqs + other.eqs,
                                    ambient=self.ambient, bounded=bounded)

    @cached_property
    def _int_rows(self):
        """Integer (a, floor b) rows and (a, b) equalities, valid on integer points."""
        ie = [(tuple(int(x) for x in a), floor(b)) for a, b in self.ineqs]
        eq = [(tuple(int(x) for x in a), b) for a, b in self.eqs]
        return ie, eq

    def _contains_int(self, x) -> bool:
        ie, eq = self._int_rows
        for a, b in eq:
            if sum(p * q for p, q in zip(a, x)) != b:
                return False
        for a, b in ie:
            if sum(p * q for p, q in zip(a, x)) > b:
                return False
        return True

    def lattice_points(self, interior=False, lattice=None):
        self._need_bounded()
        if self.is_empty:
            return []
        cache = self.__dict__.setdefault("_lp_cache", {})
        key = (interior, None if lattice is None else lattice.basis)
        if key in cache:
            return list(cache[key])
        p0, rows, piv = self.chart
        if not piv:
            pts = [tuple(int(x) for x in p0)] if all(x.denominator == 1 for x in p0) else []
        else:
            ranges = []
            for j in piv:
                lo = min(v[j] for v in self._vertices)
                hi = max(v[j] for v in self._vertices)
                ranges.append(range(ceil(lo), floor(hi) + 1))
            pts = []
            for ys in itertools.product(*ranges):
                x = list(p0)
                for y, j, r in zip(ys, piv, rows):
                    c = y - p0[j]
                    if c:
                        x = [a + c * b for a, b in zip(x, r)]
                if all(v.denominator == 1 for v in x):
                    x = tuple(int(v) for v in x)
                    if self._contains_int(x):
                        pts.append(x)
        if interior:
            pts = [p for p in pts if self.contains_relint(p)]
        if lattice is not None:
            pts = [p for p in pts if lattice.contains(p)]
        out = sorted(pts)
        cache[key] = out
        return list(out)

    def is_integral(self) -> bool:
        self._need_bounded()
        return all(x.denominator == 1 for v in self._vertices for x in v)

    @cached_property
    def _tight(self):
        """For each vertex, the frozenset of inequality indices tight there."""
        return [frozenset(i for i, (a, b) in enumerate(self.ineqs) if dot(a, v) == b) for v in self._vertices]

    def edges(self):
        """Vertex index pairs spanning edges."""
        self._need_bounded()
        d = self.dim
        if d <= 0:
            return []
        V = self._vertices
        if d == 1:
            return [(0, 1)]
        p0, rows, piv = self.chart
        normals = [tuple(dot(a, r) for r in rows) for a, _ in self.ineqs]
        out = []
        for i, j in itertools.combinations(range(len(V)), 2):
            common = self._tight[i] & self._tight[j]
            if len(common) < d - 1:
                continue
            if rank([normals[k] for k in common]) == d - 1:
                out.append((i, j))
        return out

    def edge_directions(self):
        V = self._vertices
        return [tuple(b - a for a, b in zip(V[i], V[j])) for i, j in self.edges()]

    def canonical_key(self):
        """Vertex tuple after translating the lex-smallest vertex to the origin."""
        self._need_bounded()
        if self.is_empty:
            return ()
        v0 = self._vertices[0]
        return tuple(tuple(a - b for a, b in zip(v, v0)) for v in self._vertices)

    def key(self):
        if self.is_empty:
            return ("E", self.ambient)
        if self.bounded:
            return ("V", self._vertices)
        return ("H", self.ineqs, self.eqs)

    def __eq__(self, other):
        return isinstance(other, Polyhedron) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.is_empty:
            return f"Polyhedron.empty({self.ambient})"
        if self.bounded:
            vs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self._vertices)
            return f"Polyhedron[{vs}]"
        return f"Polyhedron(H, {len(self.ineqs)} ineqs, {len(self.eqs)} eqs)"


def minkowski_sum(P, Q):
    P._need_bounded()
    Q._need_bounded()
    if P.ambient != Q.ambient:
        raise InputError("ambient dimension mismatch")
    if P.is_empty or Q.is_empty:
        return Polyhedron.empty(P.ambient)
    pts = {tuple(a + b for a, b in zip(u, v)) for u in P._vertices for v in Q._vertices}
    return Polyhedron.from_vertices(pts)


def minkowski_difference(A, B):
    """{x : x + B subset A}; the result R satisfies R + B = A only if B is a summand."""
    A._need_bounded()
    B._need_bounded()
    if A.is_empty or B.is_empty:
        return Polyhedron.empty(A.ambient)
    rows_i, rows_e = [], []
    for b in B._vertices:
        rows_i += [(a, c - dot(a, b)) for a, c in A.ineqs]
        rows_e += [(a, c - dot(a, b)) for a, c in A.eqs]
    return Polyhedron.from_hrep(rows_i, rows_e, ambient=A.ambient, bounded=True)


def vertices(P):
    return P.vertices


def lattice_points(P, interior=False, lattice=None):
    return P.lattice_points(interior=interior, lattice=lattice)


def translate_containments(P, Q):
    """All integer m with P + m inside Q."""
    P._need_bounded()
    Q._need_bounded()
    if P.is_empty or Q.is_empty:
        return []
    # every such m lies in Q - P; scan its bounding box and test containment exactly
    n = P.ambient
    ranges = []
    for j in range(n):
        lo = min(v[j] for v in Q._vertices) - max(v[j] for v in P._vertices)
        hi = max(v[j] for v in Q._vertices) - min(v[j] for v in P._vertices)
        ranges.append(range(ceil(lo), floor(hi) + 1))
    out = []
    PV = P._vertices
    for m in itertools.product(*ranges):
        if all(Q.contains(tuple(a + b for a, b in zip(v, m))) for v in PV):
            out.append(tuple(m))
    return out


# ---------- internals

def _is_bounded(ineqs, eqs, n):
    cone_i = [(a, ZERO) for a, _ in ineqs]
    cone_e = [(a, ZERO) for a, _ in eqs]
    for j in range(n):
        for s in (1, -1):
            # is there y in the recession cone with s*y_j > 0 ?
            e = tuple(Fraction(-s) if k == j else ZERO for k in range(n))
            if lp.max_slack(cone_i, [(e, ZERO)], cone_e, n) is not None:
                return False
    return True


def _enumerate_vertices(ineqs, eqs, n):
    if eqs:
        A = [list(a) + [b] for a, b in eqs]
        red, piv = rref(A, n + 1)
        if n in piv:
            return []
        x0 = [ZERO] * n
        for r, p in zip(red, piv):
            x0[p] = r[n]
        N = nullspace([r[:n] for r in red], n)
    else:
        x0 = [ZERO] * n
        N = nullspace([], n)
    k = len(N)
    rows = []
    for a, b in ineqs:
        na = tuple(dot(a, v) for v in N)
        nb = b - dot(a, x0)
        if not any(na):
            if nb < 0:
                return []
            continue
        rows.append(primitive(na, nb))
    rows = sorted(set(rows))

    def lift(y):
        return tuple(x0[i] + sum(y[j] * N[j][i] for j in range(k)) for i in range(n))

    if k == 0:
        return [tuple(x0)] if all(b >= 0 for _, b in rows) else []
    # integer rows: A y <= b with A, b integral
    irows = []
    for a, b in rows:
        den = 1
        for x in list(a) + [b]:
            den = den * x.denominator // gcd(den, x.denominator)
        irows.append((tuple(int(x * den) for x in a), int(b * den)))
    found = set()
    for comb in itertools.combinations(range(len(irows)), k):
        A = [irows[i][0] for i in comb]
        D = _int_det(A)
        if D == 0:
            continue
        bb = [irows[i][1] for i in comb]
        num = []
        for j in range(k):
            Aj = [list(r) for r in A]
            for r in range(k):
                Aj[r][j] = bb[r]
            num.append(_int_det(Aj))
        if D < 0:
            D, num = -D, [-x for x in num]
        if all(sum(x * y for x, y in zip(a, num)) <= b * D for a, b in irows):
            found.add(tuple(Fraction(x, D) for x in num))
    return [lift(y) for y in found]


def _hull(pts):
    """(eqs, ineqs, vertices) of conv(pts); pts is a sorted duplicate-free list."""
    n = len(pts[0])
    p0 = pts[0]
    D = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
    if D:
        red, piv = rref(D, n)
    else:
        red, piv = [], []
    d = len(piv)
    eqs = []
    for a in nullspace(red, n) if red else nullspace([], n):
        a, b = primitive(a, dot(a, p0))
        # make the first nonzero entry positive for a stable form
        if next(x for x in a if x != 0) < 0:
            a, b = tuple(-x for x in a), -b
        eqs.append((a, b))
    if d == 0:
        return tuple(sorted(eqs)), (), [p0]
    Yq = [tuple(p[j] for j in piv) for p in pts]
    den, Y = _as_int_points(Yq)
    facets = _facets_full_dim(Y, d)
    ineqs = []
    tight_lists = [[] for _ in pts]
    for fi, (c, val, tight) in enumerate(facets):
        a = [ZERO] * n
        for cj, j in zip(c, piv):
            a[j] = Fraction(cj)
        ineqs.append((tuple(a), Fraction(val) / den))
        for t in tight:
            tight_lists[t].append(fi)
    verts = []
    for i, p in enumerate(pts):
        tl = tight_lists[i]
        if len(tl) >= d and rank([facets[f][0] for f in tl]) == d:
            verts.append(p)
    order = sorted(range(len(ineqs)), key=lambda i: ineqs[i])
    return tuple(sorted(eqs)), tuple(ineqs[i] for i in order), verts
