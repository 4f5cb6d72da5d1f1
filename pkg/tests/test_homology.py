import random

import pytest

from polyext.collections import build_collection
from polyext.errors import InputError
from polyext.homology import (
    BettiTable, SimplicialComplex, ext_table, nerve_of_violation_cover, reduced_cohomology,
    set_difference_cohomology, shifted_complement_cohomology_oracle, translation_range,
)
from polyext.ratgeom import Polyhedron, minkowski_sum
from polyext.samples import random_gp, random_translate

PT1 = Polyhedron.point((0,))
SEG2 = Polyhedron.from_vertices([(0,), (2,)])
EDGE = Polyhedron.from_vertices([(1, 0), (0, 1)])


def test_reduced_cohomology_basics():
    assert reduced_cohomology(SimplicialComplex(1, ((0,),))) == BettiTable({})
    circle = SimplicialComplex(3, ((0, 1), (1, 2), (0, 2)))
    assert reduced_cohomology(circle) == BettiTable({1: 1})
    assert reduced_cohomology(SimplicialComplex(0, ())) == BettiTable({-1: 1})
    two_points = SimplicialComplex(2, ((0,), (1,)))
    assert reduced_cohomology(two_points) == BettiTable({0: 1})
    sphere = SimplicialComplex(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
    assert reduced_cohomology(sphere) == BettiTable({2: 1})


def test_nerve_examples():
    K = nerve_of_violation_cover(SEG2, Polyhedron.point((1,)))
    assert K.num_vertices == 2 and K.facets == ((0,), (1,))
    K = nerve_of_violation_cover(EDGE, Polyhedron.point((1, 0)))
    assert K.num_vertices == 1
    assert reduced_cohomology(K) == BettiTable({})
    assert nerve_of_violation_cover(EDGE, Polyhedron.cube(2)).num_vertices == 0
    with pytest.raises(InputError):
        nerve_of_violation_cover(SEG2, PT1, dim_cap=1)


def test_set_difference_examples():
    assert set_difference_cohomology(SEG2, SEG2, (0,)) == BettiTable({-1: 1})
    assert set_difference_cohomology(SEG2, PT1, (1,)) == BettiTable({0: 1})
    assert set_difference_cohomology(EDGE, Polyhedron.point((1, 0)), (0, 0)) == BettiTable({})


def test_ext_examples():
    assert ext_table(PT1, SEG2).totals() == {0: 3}
    assert ext_table(SEG2, PT1).totals() == {1: 1}
    assert ext_table(SEG2, PT1).entries == {((1,), 1): 1}
    sq = Polyhedron.cube(2)
    assert ext_table(EDGE, sq, equivariant=True) == BettiTable({0: 1}, kind="ext_equivariant")


def test_oracle_examples():
    assert shifted_complement_cohomology_oracle(SEG2, PT1, (1,)) == BettiTable({0: 1})
    assert shifted_complement_cohomology_oracle(SEG2, SEG2) == BettiTable({-1: 1})


def test_oracle_agreement_small():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.choice([2, 3])
        P = random_translate(random_gp(n, rng, rng.randint(1, 2)), rng, 1)
        Q = random_translate(random_gp(n, rng, rng.randint(1, 2)), rng, 1)
        for m in translation_range(P, Q):
            assert set_difference_cohomology(P, Q, m) == shifted_complement_cohomology_oracle(P, Q, m)


def test_fast_path_agrees_with_full_nerve():
    rng = random.Random(6)
    for _ in range(15):
        P = random_gp(3, rng, 2)
        Q = random_translate(random_gp(3, rng, 2), rng, 1)
        for m in translation_range(P, Q):
            assert set_difference_cohomology(P, Q, m) == set_difference_cohomology(P, Q, m, fast_path=False)


def test_minkowski_invariance():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.choice([2, 3])
        P1 = random_gp(n, rng, rng.randint(1, 2))
        P2 = random_translate(random_gp(n, rng, 1), rng, 1)
        R = random_gp(n, rng, 1)
        lhs = set_difference_cohomology(P1, P2)
        rhs = set_difference_cohomology(minkowski_sum(P1, R), minkowski_sum(P2, R))
        assert lhs == rhs


def test_translation_invariance():
    rng = random.Random(8)
    for _ in range(20):
        P = random_gp(3, rng, 2)
        Q = random_gp(3, rng, 1)
        t = tuple(rng.randint(-2, 2) for _ in range(3))
        for m in translation_range(P, Q):
            mt = tuple(a + b for a, b in zip(m, t))
            assert set_difference_cohomology(P, Q, m) == set_difference_cohomology(P.translate(t), Q, mt)


@pytest.mark.parametrize("family,n", [("perm", 3), ("stell", 3), ("permB", 3)])
def test_ext_from_point_counts_lattice_points(family, n):
    coll = build_collection(family, n)
    pt = Polyhedron.point((0,) * n)
    for Q in coll.polytopes():
        assert ext_table(pt, Q).totals() == {0: len(Q.lattice_points())}


def test_degrees_bounded_by_dimension():
    rng = random.Random(9)
    for _ in range(20):
        P = random_gp(3, rng, rng.randint(1, 2))
        Q = random_translate(random_gp(3, rng, 1), rng, 1)
        for m in translation_range(P, Q):
            h = set_difference_cohomology(P, Q, m)
            assert all(p <= P.dim for p in h.entries)


def test_ext_json_shape():
    js = ext_table(SEG2, PT1).to_json()
    assert js["ext"] == [{"m": [1], "p": 1, "dim": 1}]
    assert list(js["ext"][0]) == ["m", "p", "dim"]
