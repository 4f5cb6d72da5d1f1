"""Group actions on collections, cuspidal sub-collections and forgetful compatibility."""
from __future__ import annotations

import itertools

from ..errors import InputError
from ..ratgeom import Polyhedron
from .core import Collection, build_collection, make_collection, order_key

GROUPS = {"perm": ("S_n", "S2xSn"), "stell": ("S_n",), "permB": ("S_n", "SnB")}


def _swap(n, i):
    def f(x):
        y = list(x)
        y[i], y[i + 1] = y[i + 1], y[i]
        return tuple(y)
    return f


def _negate_first(x):
    return (-x[0],) + tuple(x[1:])


def _negate_all(x):
    return tuple(-a for a in x)


def group_generators(group, n):
    """Named linear maps generating the group's coordinate action."""
    gens = [(f"s{i + 1}", _swap(n, i)) for i in range(n - 1)]
    if group == "S_n":
        return gens
    if group == "S2xSn":
        return gens + [("cr", _negate_all)]
    if group == "SnB":
        return gens + ([("t1", _negate_first)] if n else [])
    if group == "identity":
        return [("id", lambda x: tuple(x))]
    raise InputError(f"unknown group {group!r}")


def symmetry_orbit_check(c: Collection, group):
    """(ok, {generator: [image id of item 1, ...]}); images are found up to translation."""
    n = c.fan.n
    maps = {}
    ok = True
    for name, g in group_generators(group, n):
        images = []
        for it in c.items:
            j = c.find_translate(it.polytope.map_points(g))
            images.append(j)
            ok = ok and j is not None
        if ok and sorted(images) != [it.id for it in c.items]:
            ok = False
        maps[name] = images
    return ok, maps


def orbits(c: Collection, group):
    """Partition of item ids into orbits of the group generated by the generators."""
    _, maps = symmetry_orbit_check(c, group)
    parent = {it.id: it.id for it in c.items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for images in maps.values():
        for i, j in enumerate(images, start=1):
            if j is not None:
                parent[find(i)] = find(j)
    out = {}
    for i in parent:
        out.setdefault(find(i), []).append(i)
    return sorted(out.values())


def constant_coordinates(P):
    V = P.vertices
    return [i for i in range(P.ambient) if len({v[i] for v in V}) == 1]


def is_generic(P) -> bool:
    """No lattice translate of P lies in a proper coordinate subspace."""
    if P.ambient == 0:
        return False
    v = P.vertices[0]
    return not any(v[i].denominator == 1 for i in constant_coordinates(P))


def cuspidal_subcollection(c: Collection) -> Collection:
    """Generic items, ordered by non-increasing lattice-point count."""
    keep = [it for it in c.items if is_generic(it.polytope)]
    keep.sort(key=lambda it: order_key(it.polytope, c.lattice))
    keep.reverse()
    out = make_collection(c.fan, [it.polytope for it in keep], [it.source for it in keep],
                          name=f"{c.name}_cuspidal", lattice=c.lattice, sort=False)
    return out


def project(P, coords):
    return Polyhedron.from_vertices([tuple(v[i] for i in coords) for v in P.vertices], ambient=len(coords))


def forgetful_compatibility(family, n, caps=None):
    """For each S in [n], items with a translate in R^S match the collection on |S| elements."""
    big = build_collection(family, n, caps)
    report = {}
    ok = True
    for r in range(n + 1):
        small = {k for k in build_collection(family, r, caps).keys()}
        for S in itertools.combinations(range(n), r):
            outside = [i for i in range(n) if i not in S]
            inside = [it for it in big.items if set(outside) <= set(constant_coordinates(it.polytope))]
            keys = [project(it.polytope, S).canonical_key() for it in inside]
            good = len(keys) == len(set(keys)) and set(keys) == small
            ok = ok and good
            report[tuple(i + 1 for i in S)] = {"members": len(inside), "expected": len(small), "ok": good}
    return ok, report


def derangements(n) -> int:
    return sum(1 for p in itertools.permutations(range(n)) if all(p[i] != i for i in range(n)))


def signed_derangements(n) -> int:
    """Signed permutations of [n] with w(i) != i for every i."""
    count = 0
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if all(s * x != i + 1 for i, (s, x) in enumerate(zip(signs, p))):
                count += 1
    return count
