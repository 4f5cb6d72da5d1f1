import itertools
import random
from fractions import Fraction

import pytest

from polyext.errors import InputError, UnsupportedError
from polyext.ratgeom import (
    AffineForm, FanFamily, Lattice, Polyhedron, dumps, in_deformation_cone, lattice_points,
    lp_feasible, minkowski_sum, minkowski_difference, polyhedron_from_json, polyhedron_to_json,
    translate_containments, vertices,
)
from polyext.matroid import Matroid, SubmodularFn, base_polytope, base_polytope_mu
from polyext.samples import random_gp, random_typeb

F = Fraction


def brute_lattice(P):
    V = P.vertices
    box = [range(int(min(v[i] for v in V)) - 1, int(max(v[i] for v in V)) + 2) for i in range(P.ambient)]
    return sorted(p for p in itertools.product(*box) if P.contains(p))


def test_lp_feasible_examples():
    assert lp_feasible([AffineForm((-1,), 0), AffineForm((1,), 1)]) is not None
    assert lp_feasible([AffineForm((1,), 0, "<"), AffineForm((-1,), -1, "<")]) is None
    seg = Polyhedron.from_vertices([(1, 0), (0, 1)])
    w = lp_feasible(seg.forms() + [AffineForm((1, 0), 1, "<")])
    assert w is not None and seg.contains(w) and w[0] < 1


def test_lp_rejects_mismatched_and_trivial_forms():
    with pytest.raises(InputError):
        lp_feasible([AffineForm((1,), 0), AffineForm((1, 1), 0)])
    with pytest.raises(InputError):
        AffineForm((0, 0), 1)


def test_strict_boundary_cases():
    # x <= 0 and x >= 0 is feasible, x < 0 with x >= 0 is not
    assert lp_feasible([AffineForm((1,), 0), AffineForm((-1,), 0)]) == (0,)
    assert lp_feasible([AffineForm((1,), 0, "<"), AffineForm((-1,), 0)]) is None


def test_vertex_examples():
    simplex = Polyhedron.from_hrep([((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0)], [((1, 1, 1), 1)])
    assert simplex.vertices == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    rows = []
    mu = {1: 3, 2: 5}
    for k in (1, 2):
        for A in itertools.combinations(range(3), k):
            rows.append((tuple(1 if i in A else 0 for i in range(3)), mu[k]))
    perm = Polyhedron.from_hrep(rows, [((1, 1, 1), 6)])
    assert sorted(perm.vertices) == sorted(itertools.permutations((1, 2, 3)))
    assert len(vertices(Polyhedron.cube(2))) == 4


def test_vertices_of_cone_unsupported():
    cone = Polyhedron.from_hrep([((-1, 0), 0), ((0, -1), 0)])
    assert not cone.bounded
    with pytest.raises(UnsupportedError):
        cone.vertices


def test_lattice_point_examples():
    d24 = base_polytope(Matroid.uniform(2, 4))
    assert len(lattice_points(d24)) == 6
    two_simplex = Polyhedron.simplex(2, 2)
    assert len(two_simplex.lattice_points()) == 6
    assert two_simplex.lattice_points(interior=True) == []
    assert len(Polyhedron.point((1, 2)).lattice_points()) == 1
    assert Polyhedron.point((F(1, 2), 2)).lattice_points() == []


def test_lattice_points_match_rasterization():
    rng = random.Random(1)
    for _ in range(30):
        P = random_gp(3, rng, rng.randint(1, 3)) if rng.random() < 0.5 else random_typeb(3, rng, 3)
        assert P.lattice_points() == brute_lattice(P)


def test_even_lattice_interior_point():
    sq = Polyhedron.cube(2, 0, 2)
    assert sq.lattice_points(interior=True, lattice=Lattice.even(2)) == [(1, 1)]
    assert len(sq.lattice_points(lattice=Lattice.even(2))) == 5


def test_minkowski_examples():
    P = Polyhedron.from_vertices([(0, 0), (1, 0)])
    assert minkowski_sum(P, Polyhedron.point((2, 3))) == P.translate((2, 3))
    assert minkowski_sum(P, Polyhedron.from_vertices([(0, 0), (0, 1)])) == Polyhedron.cube(2)


def test_minkowski_of_base_polytopes_is_base_polytope_of_sum():
    rng = random.Random(2)
    for _ in range(10):
        mus = []
        for _ in range(2):
            M = Matroid.uniform(rng.randint(0, 3), 3)
            mus.append(SubmodularFn(3, tuple(M.rank_of(A) for A in range(8))))
        lhs = minkowski_sum(base_polytope_mu(mus[0]), base_polytope_mu(mus[1]))
        assert lhs == base_polytope_mu(mus[0] + mus[1])


def test_support_function_additive():
    rng = random.Random(3)
    for _ in range(20):
        P, Q = random_typeb(3, rng, 2), random_gp(3, rng, 2)
        S = minkowski_sum(P, Q)
        for _ in range(5):
            w = tuple(rng.randint(-3, 3) for _ in range(3))
            assert S.support(w) == P.support(w) + Q.support(w)


def test_minkowski_difference_recovers_summand():
    rng = random.Random(4)
    for _ in range(10):
        P, Q = random_gp(3, rng, 2), random_gp(3, rng, 1)
        assert minkowski_difference(minkowski_sum(P, Q), Q) == P


def test_hrep_vrep_round_trip_membership():
    rng = random.Random(5)
    for _ in range(10):
        P = random_typeb(3, rng, 3)
        H = Polyhedron.from_hrep(P.ineqs, P.eqs, ambient=3)
        assert H == P
        for _ in range(100):
            x = tuple(F(rng.randint(-4, 8), rng.randint(1, 4)) for _ in range(3))
            inside = _in_hull(P, x)
            assert H.contains(x) == inside


def _in_hull(P, x):
    # independent membership oracle: x is a convex combination of the vertices
    V = P.vertices
    N = len(V)
    forms = [AffineForm(tuple(-1 if j == i else 0 for j in range(N)), 0) for i in range(N)]
    forms.append(AffineForm((1,) * N, 1, "="))
    for k in range(P.ambient):
        row = tuple(v[k] for v in V)
        if not any(row):
            if x[k] != 0:
                return False
            continue
        forms.append(AffineForm(row, x[k], "="))
    return lp_feasible(forms) is not None


def test_lp_witness_iff_vertices():
    rng = random.Random(6)
    for _ in range(20):
        a = [tuple(rng.randint(-2, 2) or 1 for _ in range(2)) for _ in range(4)]
        b = [rng.randint(-2, 3) for _ in range(4)]
        box = [((1, 0), 3), ((-1, 0), 3), ((0, 1), 3), ((0, -1), 3)]
        rows = list(zip(a, b)) + box
        P = Polyhedron.from_hrep(rows, ambient=2)
        w = lp_feasible([AffineForm(r, c) for r, c in rows])
        assert (w is not None) == (not P.is_empty) == bool(P.vertices)


def test_deformation_cone_examples():
    from polyext.matroid import Matroid

    assert in_deformation_cone(base_polytope(Matroid.uniform(2, 3)), FanFamily("BraidA", 3))
    sq = Polyhedron.cube(2)
    assert not in_deformation_cone(sq, FanFamily("BraidA", 2))
    assert in_deformation_cone(sq, FanFamily("Stellahedral", 2))
    tri = Polyhedron.from_vertices([(1, 0), (0, 1), (1, 1)])
    assert in_deformation_cone(tri, FanFamily("TypeB", 2))
    with pytest.raises(InputError):
        in_deformation_cone(Polyhedron.point((F(1, 2), 0)), FanFamily("TypeB", 2))


def test_stellahedral_uses_cones_not_only_edges():
    # edges e1-e2, e1, e2 are admissible, but the normal fan does not coarsen the stellahedral fan
    tri = Polyhedron.from_vertices([(1, 0), (0, 1), (1, 1)])
    assert not in_deformation_cone(tri, FanFamily("Stellahedral", 2))
    assert in_deformation_cone(Polyhedron.simplex(2), FanFamily("Stellahedral", 2))


def test_every_matroid_polytope_in_braid_cone():
    from polyext.suites import all_matroids

    fan = FanFamily("BraidA", 4)
    assert all(in_deformation_cone(base_polytope(M), fan) for M in all_matroids(4))


def test_fan_counts_against_independent_enumeration():
    # ordered set partitions of [n] count maximal braid cones: n!
    assert sum(1 for c in FanFamily("BraidA", 4).fan().cones if len(c) == 3) == 24
    # signed permutations for type B
    assert sum(1 for c in FanFamily("TypeB", 3).fan().cones if len(c) == 3) == 48
    # compatible pairs (I, F) with I a chain-bottom: maximal ones
    stell = FanFamily("Stellahedral", 3).fan()
    assert sum(1 for c in stell.cones if len(c) == 3) == 16
    assert len(FanFamily("TypeB", 3).fan().cones) == 147


def test_translate_containments_examples():
    P = Polyhedron.from_vertices([(0, 1), (1, 0)])
    assert (0, 0) in translate_containments(P, P)
    pt, seg = Polyhedron.point((0,)), Polyhedron.from_vertices([(0,), (2,)])
    assert translate_containments(pt, seg) == [(0,), (1,), (2,)]
    assert translate_containments(seg, pt) == []


def test_json_round_trip_byte_stable():
    P = Polyhedron.from_vertices([(0, F(1, 2)), (1, 0), (0, 0)])
    s = dumps(polyhedron_to_json(P))
    Q = polyhedron_from_json(polyhedron_to_json(P))
    assert Q == P and dumps(polyhedron_to_json(Q)) == s
    H = polyhedron_from_json(polyhedron_to_json(P, vrep=False))
    assert H == P
    with pytest.raises(InputError):
        polyhedron_from_json({"ambient": 1, "vertices": [[0.5]]})


def test_canonical_key_is_translation_invariant():
    P = Polyhedron.from_vertices([(0, 0), (2, 1), (1, 3)])
    assert P.canonical_key() == P.translate((5, -7)).canonical_key()
    assert P.canonical_key() != (-P).canonical_key()
