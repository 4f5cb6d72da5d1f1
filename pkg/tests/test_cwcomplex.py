import itertools
import random

import pytest

from polyext.collections.certificates import cube_slices
from polyext.cwcomplex import (
    CWPoset, IEComplex, IndicatorExpr, alternating_indicator, boolean_poset, brianchon_gram,
    chain_pair, check_exactness_tstalks, derksen_fink_decompose, face_lattice, incidence_signs,
    subdivision_koszul, tensor_translate, truncate_complex, truncated_bg, two_chain,
)
from polyext.errors import InputError, StructuralError
from polyext.matroid import Matroid, base_polytope, direct_sum, enumerate_schubert, independence_polytope
from polyext.ratgeom import FanFamily, Polyhedron
from polyext.samples import random_box, random_gp, random_translate
from polyext.suites import all_matroids

V = Polyhedron.from_vertices


def _diamond_products(poset):
    s = poset.signs
    out = []
    for x, z, ys in poset.diamonds():
        y1, y2 = ys
        out.append(s[(x, y1)] * s[(y1, z)] * s[(x, y2)] * s[(y2, z)])
    return out


def test_boolean_signs():
    B = boolean_poset(2)
    assert _diamond_products(B) == [-1]
    B3 = boolean_poset(3)
    assert set(_diamond_products(B3)) == {-1}
    assert all(B3.signs[(B3.bottom, y)] == 1 for y in B3.up[B3.bottom])


def test_square_face_lattice_signs():
    P = face_lattice(Polyhedron.cube(2))
    prods = _diamond_products(P)
    # empty < vertex < edge and vertex < edge < square, four of each
    assert len(prods) == 8 and set(prods) == {-1}


def test_chain_pair_sign():
    C = chain_pair()
    assert C.signs == {(0, 1): 1}
    assert incidence_signs(C) == {(0, 1): 1}


def test_non_thin_poset_rejected():
    # bottom < a, b, c < top: the interval has three middle elements
    with pytest.raises(InputError):
        CWPoset(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def _dp5():
    P = V([(0, 0), (1, 0), (1, 1), (-1, 3), (-1, 1)])
    pieces = [V([(0, 0), (1, 0), (-1, 2), (-1, 1)]),
              V([(0, 0), (1, 0), (1, 1), (0, 2)]),
              V([(0, 1), (0, 2), (-1, 3), (-1, 2)])]
    return P, pieces


def test_dp5_koszul_exact():
    P, pieces = _dp5()
    c = subdivision_koszul(pieces, P)
    ok, rep = check_exactness_tstalks(c)
    assert ok and rep["terms"] == {0: 1, 1: 3, 2: 3, 3: 1}
    assert c.labels[c.poset.bottom].lattice_points() == [(0, 1)]


def test_koszul_rejects_non_cover():
    P, pieces = _dp5()
    with pytest.raises(InputError):
        subdivision_koszul(pieces[:2], P)


def test_triangle_cover_koszul():
    T3 = Polyhedron.simplex(2).scale(3)
    T2 = Polyhedron.simplex(2).scale(2)
    c = subdivision_koszul([T2, T2.translate((1, 0)), T2.translate((0, 1))], T3)
    assert check_exactness_tstalks(c)[0]


def test_cube_slices_of_permutahedron():
    pi3 = base_polytope(Matroid.uniform(1, 3))
    from polyext.ratgeom import minkowski_sum
    for k in (2, 3):
        pi3 = minkowski_sum(pi3, base_polytope(Matroid.uniform(k - 1, 3)))
    pieces = cube_slices(pi3)
    c = subdivision_koszul(pieces, pi3)
    assert check_exactness_tstalks(c)[0]
    for Q in pieces:
        lo = tuple(min(v[i] for v in Q.vertices) for i in range(3))
        shifted = Q.translate(tuple(-x for x in lo))
        assert all(all(x in (0, 1) for x in v) for v in shifted.vertices)


def test_single_piece_koszul():
    P = Polyhedron.cube(2)
    c = subdivision_koszul([P], P)
    ok, rep = check_exactness_tstalks(c)
    assert ok and rep["terms"] == {0: 1, 1: 1}


def test_segment_in_square_tbg():
    seg = V([(0, 1), (1, 1)])
    sq = Polyhedron.cube(2, 0, 2)
    c = truncated_bg(seg, sq, FanFamily("ProductP1", 2))
    ok, rep = check_exactness_tstalks(c)
    assert ok and rep["terms"] == {0: 1, 1: 4, 2: 4, 3: 1}
    assert c.labels[-1] == sq or sq in c.labels


def test_two_chain_not_exact():
    c = two_chain(Polyhedron.point((0,)), Polyhedron.cube(1))
    ok, rep = check_exactness_tstalks(c)
    assert not ok
    assert [f["m"] for f in rep["failures"]] == [[1]]
    assert not rep["failures"][0]["interval"]


def test_bg_euler_characteristic():
    seg = V([(0,), (2,)])
    c = brianchon_gram(seg, FanFamily("ProductP1", 1))
    # the stalk of the augmented complex has Euler characteristic 0, so the
    # cones alone give 1_P(m)
    for m, want in (((1,), 1), ((3,), 0), ((-1,), 0), ((0,), 1)):
        cones = sum((-1) ** (c.poset.rank[i] + 1) for i in c.support_of(m) if i != c.poset.bottom)
        assert cones == want
    assert check_exactness_tstalks(c)[0]


def test_bg_random_polygons_acyclic():
    rng = random.Random(3)
    for k in range(8):
        if k % 2:
            fam, P = FanFamily("ProductP1", 2), random_box(2, rng)
        else:
            fam, P = FanFamily("BraidA", 3), random_translate(random_gp(3, rng, 2), rng, 1)
        assert check_exactness_tstalks(brianchon_gram(P, fam))[0]


def test_bg_rejects_polytope_outside_cone():
    tri = V([(0, 0), (2, 0), (0, 1)])
    with pytest.raises(InputError):
        brianchon_gram(tri, FanFamily("ProductP1", 2))


def test_tbg_labels_schubert():
    sch = {base_polytope(M) for M in enumerate_schubert(3, "all")}
    for M in all_matroids(3):
        if M.rank in (0, 3):
            continue
        c = truncated_bg(base_polytope(M), base_polytope(Matroid.uniform(M.rank, 3)), FanFamily("BraidA", 3))
        assert check_exactness_tstalks(c)[0]
        for i in c.alive:
            if i == c.poset.bottom:
                continue
            assert c.labels[i] in sch


def test_derksen_fink_uniform_single_term():
    expr = derksen_fink_decompose(Matroid.uniform(2, 4))
    assert len(expr) == 1 and expr.terms[0] == (1, base_polytope(Matroid.uniform(2, 4)))


def test_derksen_fink_direct_sum():
    u = Matroid.uniform(1, 2)
    M = direct_sum(u, u)
    expr = derksen_fink_decompose(M)
    P = base_polytope(M)
    box = base_polytope(Matroid.uniform(2, 4))
    pts = box.lattice_points()
    assert len(pts) == 6
    for p in pts:
        assert expr(p) == (1 if P.contains(p) else 0)
    for p in itertools.product(range(-1, 3), repeat=4):
        assert expr(p) == (1 if P.contains(p) else 0)


def test_derksen_fink_all_rank_matroids_on_three():
    for M in all_matroids(3):
        expr = derksen_fink_decompose(M)
        P = base_polytope(M)
        for p in itertools.product(range(-1, 3), repeat=3):
            assert expr(p) == (1 if P.contains(p) else 0)


def test_independence_complex_from_tbg():
    for M in all_matroids(3):
        if M.rank in (0, 3) or M.loops:
            continue
        n = M.n
        c = truncated_bg(base_polytope(M), base_polytope(Matroid.uniform(M.rank, n)), FanFamily("BraidA", n))
        c2 = truncate_complex(tensor_translate(c, Polyhedron.cube(n, -1, 0)), Polyhedron.cube(n),
                              FanFamily("Stellahedral", n))
        assert c2.labels[c2.poset.bottom] == independence_polytope(M)
        assert check_exactness_tstalks(c2)[0]


def test_translate_shifts_stalks():
    P, pieces = _dp5()
    c = subdivision_koszul(pieces, P)
    t = (2, -1)
    c2 = tensor_translate(c, t)
    for m in P.lattice_points():
        m2 = tuple(a + b for a, b in zip(m, t))
        assert c.stalk_report(m)["dims"] == c2.stalk_report(m2)["dims"]
    back = tensor_translate(c2, t, "subtract")
    assert back.labels == c.labels


def test_subtract_requires_summand():
    c = two_chain(Polyhedron.point((0, 0)), Polyhedron.cube(2))
    with pytest.raises(InputError):
        tensor_translate(c, Polyhedron.cube(2), "subtract")


def test_disjoint_truncation_vacuous():
    P, pieces = _dp5()
    c = truncate_complex(subdivision_koszul(pieces, P), Polyhedron.cube(2, 10, 11))
    assert c.alive == []
    ok, rep = check_exactness_tstalks(c)
    assert ok and rep["points"] == 0


def test_indicator_alternating_sum():
    P, pieces = _dp5()
    c = subdivision_koszul(pieces, P)
    expr = alternating_indicator(c)
    for m in itertools.product(range(-2, 3), range(-1, 5)):
        assert expr(m) == (1 if c.labels[c.poset.bottom].contains(m) else 0)
    e = IndicatorExpr([(1, Polyhedron.cube(1)), (-1, Polyhedron.cube(1)), (2, Polyhedron.point((0,)))])
    assert len(e) == 1 and e((0,)) == 2


def test_d_squared_detects_bad_signs():
    B = boolean_poset(2)
    bad = dict(B.signs)
    bad[next(iter(bad))] *= -1
    B2 = CWPoset(B.elements, B.covers, kind="Custom", signs=bad, validate=False)
    sq = Polyhedron.cube(2)
    c = IEComplex(B2, [sq] * 4)
    with pytest.raises(StructuralError):
        c.check_d_squared()
    assert IEComplex(B, [sq] * 4).check_d_squared()
