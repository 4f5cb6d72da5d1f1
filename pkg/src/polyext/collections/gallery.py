"""Classical examples: projective spaces, Hirzebruch surfaces and a type-C probe."""
from __future__ import annotations

from ..errors import InputError
from ..ratgeom import FanFamily, Lattice, Polyhedron, in_deformation_cone, minkowski_sum
from ..homology import ext_table
from ..cwcomplex import subdivision_koszul, check_exactness_tstalks
from .core import build_collection, make_collection, verify_strong_exceptionality


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def _witness(name, cx, coll):
    ok, rep = check_exactness_tstalks(cx)
    top = cx.poset.elements.index(max(cx.poset.elements, key=len))
    leaves = [cx.labels[i] for i in cx.alive if i != top]
    missing = [repr(L) for L in leaves if coll.find_translate(L) is None]
    return {"name": name, "exact": ok, "terms": cx.terms(), "leaves_in_collection": not missing,
            "missing": missing, "complex": cx}


def projective(n):
    if not 1 <= n <= 4:
        raise InputError("projective spaces are supported for 1 <= n <= 4")
    dirs = [_unit(n, i) for i in range(n)]
    dirs += [tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j))) for i in range(n) for j in range(i + 1, n)]
    fan = FanFamily.custom(dirs)
    simplex = Polyhedron.simplex(n)
    coll = make_collection(fan, [simplex.scale(k) for k in range(n + 1)],
                           [{"kind": "classical", "bundle": f"O({k})"} for k in range(n + 1)],
                           name=f"projective_{n}")
    k = n + 1
    big = simplex.scale(k)
    pieces = []
    for i in range(n):
        row = tuple(-x for x in _unit(n, i))
        pieces.append(big.intersect(Polyhedron.from_hrep([(row, -1)], ambient=n, bounded=False)))
    pieces.append(big.intersect(Polyhedron.from_hrep([((1,) * n, k - 1)], ambient=n, bounded=False)))
    cx = subdivision_koszul(pieces, big, name=f"simplex-cover({k})")
    return coll, [_witness(f"{k}-simplex cover", cx, coll)]


def hirzebruch_polytopes(a):
    P0 = Polyhedron.point((0, 0))
    P1 = Polyhedron.from_vertices([(0, 0), (1, 0)])
    P2 = Polyhedron.from_vertices([(0, 0), (a, 0), (0, 1)])
    P3 = Polyhedron.from_vertices([(0, 0), (a + 1, 0), (1, 1), (0, 1)])
    return [P0, P1, P2, P3]


def hirzebruch(a):
    if not 0 <= a <= 3:
        raise InputError("Hirzebruch surfaces are supported for 0 <= a <= 3")
    fan = FanFamily.custom([(1, 0), (0, 1), (a, -1)] if a else [(1, 0), (0, 1)])
    polys = hirzebruch_polytopes(a)
    coll = make_collection(fan, polys, [{"kind": "classical", "bundle": f"P{i}"} for i in range(4)],
                           name=f"hirzebruch_{a}")
    P0, P1, P2, P3 = polys
    e1 = (1, 0)
    # strips x <= 1 and x >= 1 over the segment, and x <= a+1-ay, x >= 1 over P1+P3
    seg2 = minkowski_sum(P1, P1)
    w1 = subdivision_koszul([P1, P1.translate(e1)], seg2, name="strip(2P1)")
    target = minkowski_sum(P1, P3)
    w2 = subdivision_koszul([P3, P3.translate(e1)], target, name="strip(P1+P3)")
    return coll, [_witness("2P1 strips", w1, coll), _witness("P1+P3 strips", w2, coll)]


def type_c_probe():
    """The square [0,2]^2 on the even sublattice: its interior lattice point breaks
    exceptionality of the doubled type-B collection."""
    lat = Lattice.even(2)
    square = Polyhedron.cube(2, 0, 2)
    interior = square.lattice_points(interior=True, lattice=lat)
    base = build_collection("permB", 2)
    coll = make_collection(FanFamily("TypeB", 2), [P.scale(2) for P in base.polytopes()],
                           [it.source for it in base.items], name="typeC_2", lattice=lat)
    report = verify_strong_exceptionality(coll)
    witness = ext_table(square, Polyhedron.point((0, 0)), lattice=lat)
    return {"polytope": square, "interior_points": [list(map(int, p)) for p in interior],
            "collection": coll, "report": report, "exceptional": report["passed"],
            "witness": witness}


def classical_gallery(kind, param=None):
    """(collection, report, witnesses) for projective(n) or hirzebruch(a)."""
    if kind == "projective":
        coll, wit = projective(param)
    elif kind == "hirzebruch":
        coll, wit = hirzebruch(param)
    else:
        raise InputError(f"unknown gallery kind {kind!r}")
    if not all(in_deformation_cone(P, coll.fan) for P in coll.polytopes()):
        raise AssertionError("gallery member outside its deformation cone")
    return coll, verify_strong_exceptionality(coll), wit
