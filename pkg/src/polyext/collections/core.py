"""The Perm, Stell and Perm^B collections, exceptionality sweeps and Euler pairings."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..config import load_caps, require
from ..errors import InputError
from ..homology import ext_table
from ..matroid import (
    base_polytope, independence_polytope, feasible_polytope, enumerate_schubert,
    enumerate_delta_schubert,
)
from ..ratgeom import FanFamily, Polyhedron, polyhedron_to_json, translate_containments

FAMILIES = {"perm": "BraidA", "stell": "Stellahedral", "permB": "TypeB"}


@dataclass(frozen=True)
class Item:
    id: int
    polytope: Polyhedron
    source: dict

    @property
    def lattice_count(self):
        return len(self.polytope.lattice_points())


@dataclass
class Collection:
    fan: FanFamily
    items: list
    name: str = ""
    lattice: object = None
    _ext: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def polytopes(self):
        return [it.polytope for it in self.items]

    def keys(self):
        return [it.polytope.canonical_key() for it in self.items]

    def find_translate(self, P):
        """Id of the item that P translates, or None."""
        k = P.canonical_key()
        for it in self.items:
            if it.polytope.canonical_key() == k:
                return it.id
        return None

    def item(self, ident):
        return self.items[ident - 1]

    def to_json(self):
        return {
            "name": self.name,
            "fan": str(self.fan),
            "items": [
                {
                    "id": it.id,
                    "lattice_points": _count(it.polytope, self.lattice),
                    "polytope": polyhedron_to_json(it.polytope),
                    "source": it.source,
                }
                for it in self.items
            ],
        }


def _count(P, lattice=None):
    return len(P.lattice_points(lattice=lattice))


def order_key(P, lattice=None):
    return (_count(P, lattice), P.canonical_key())


def make_collection(fan, polytopes, sources=None, name="", lattice=None, sort=True):
    """Dedup by translation class and sort by (lattice points, canonical vertices)."""
    sources = sources or [{"kind": "classical"} for _ in polytopes]
    seen = {}
    for P, src in zip(polytopes, sources):
        if P.is_empty or not P.bounded:
            raise InputError("collection members must be nonempty polytopes")
        seen.setdefault(P.canonical_key(), (P, src))
    pairs = list(seen.values())
    if sort:
        pairs.sort(key=lambda ps: order_key(ps[0], lattice))
    items = [Item(i + 1, P, src) for i, (P, src) in enumerate(pairs)]
    return Collection(fan, items, name=name, lattice=lattice)


def build_collection(family, n, caps=None) -> Collection:
    caps = caps or load_caps()
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    if not isinstance(n, int) or n < 0:
        raise InputError("n must be a nonnegative integer")
    require(caps, f"{family}_n", n)
    fan = FanFamily(FAMILIES[family], n)
    if family == "perm":
        ms = enumerate_schubert(n, "loopless", caps)
        polys = [base_polytope(M) for M in ms]
        srcs = [{"kind": "matroid", "matroid": M.to_json()} for M in ms]
    elif family == "stell":
        ms = enumerate_schubert(n, "all", caps)
        polys = [independence_polytope(M) for M in ms]
        srcs = [{"kind": "matroid", "matroid": M.to_json()} for M in ms]
    else:
        ds = enumerate_delta_schubert(n, "loopless", caps)
        polys = [feasible_polytope(D) for D in ds]
        srcs = [{"kind": "delta_matroid", "delta_matroid": D.to_json()} for D in ds]
    return make_collection(fan, polys, srcs, name=f"{family}_{n}")


def _ext_job(args):
    i, j, P, Q, lattice = args
    return i, j, ext_table(P, Q, lattice=lattice)


def ext_tables(c: Collection, jobs=1):
    """Ext tables for every ordered pair of items, cached on the collection."""
    todo = [
        (a.id, b.id, a.polytope, b.polytope, c.lattice)
        for a in c.items for b in c.items if (a.id, b.id) not in c._ext
    ]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_ext_job, todo, chunksize=max(1, len(todo) // (4 * jobs))))
    else:
        results = [_ext_job(t) for t in todo]
    for i, j, t in results:
        c._ext[(i, j)] = t
    return c._ext


def verify_strong_exceptionality(c: Collection, jobs=1) -> dict:
    """Higher Ext vanishes for all ordered pairs, Hom(L_j, L_i) = 0 when j comes after i,
    and End(L_i) is one-dimensional."""
    tables = ext_tables(c, jobs)
    violations = []
    for a in c.items:
        for b in c.items:
            t = tables[(a.id, b.id)]
            tot = t.totals()
            higher = {p: d for p, d in tot.items() if p >= 1 and d}
            reason = None
            if higher:
                reason = "higher_ext"
            elif a.id == b.id and tot.get(0, 0) != 1:
                reason = "endomorphisms"
            elif a.id > b.id and tot.get(0, 0):
                reason = "backward_hom"
            if reason:
                violations.append({"src": a.id, "dst": b.id, "reason": reason, "table": t.to_json()})
    return {
        "collection": c.name,
        "size": len(c),
        "pairs": len(c) ** 2,
        "passed": not violations,
        "violations": violations,
    }


def euler_pairing_matrix(c: Collection, jobs=1):
    tables = ext_tables(c, jobs)
    N = len(c)
    return [
        [sum((-1) ** p * d for p, d in tables[(i, j)].totals().items()) for j in range(1, N + 1)]
        for i in range(1, N + 1)
    ]


def is_unitriangular(M) -> bool:
    N = len(M)
    return all(M[i][i] == 1 for i in range(N)) and all(
        M[i][j] == 0 for i in range(N) for j in range(i)
    )


def order_is_linear_extension(c: Collection) -> bool:
    """P_j + m inside P_i never happens for j after i (unless equal classes)."""
    for a in c.items:
        for b in c.items:
            if a.id > b.id and translate_containments(a.polytope, b.polytope):
                return False
    return True
