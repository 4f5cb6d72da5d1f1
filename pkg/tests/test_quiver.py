import json

import pytest

from polyext.collections import build_collection
from polyext.errors import StructuralError
from polyext.quiver import (
    Quiver, arrow_symmetry_check, arrows_respect_order, augmented_morphisms, export_dot, export_json,
    hom_census_check, indecomposable, isomorphic_to, path_label_census, tilting_quiver,
    topological_order,
)
from polyext.ratgeom import translate_containments

# reference quivers as (src, dst, label) lists
PERM3_REFERENCE = [
    (1, 3, {1}), (1, 3, {3}), (1, 2, {1}), (1, 2, {2}), (1, 4, {2}), (1, 4, {3}),
    (2, 5, {3}), (2, 6, set()), (3, 5, {2}), (3, 6, set()), (4, 5, {1}), (4, 6, set()),
]
STELL2_REFERENCE = [
    (1, 2, {1}), (1, 2, set()), (1, 3, set()), (1, 3, {2}),
    (2, 4, set()), (3, 4, set()), (2, 5, {2}), (3, 5, {1}), (4, 5, set()),
]
PERMB2_REFERENCE = [
    (1, 2, {1}), (1, 2, set()), (1, 3, set()), (1, 3, {2}),
    (2, 4, set()), (2, 5, {2}), (2, 6, {2}), (2, 7, set()),
    (3, 4, set()), (3, 5, {1}), (3, 6, set()), (3, 7, {1}),
    (4, 8, set()), (5, 8, set()), (6, 8, set()), (7, 8, set()),
]


@pytest.fixture(scope="module")
def quivers():
    return {f: tilting_quiver(build_collection(f, n)) for f, n in (("perm", 3), ("stell", 2), ("permB", 2))}


@pytest.mark.parametrize("family,expected", [("perm", PERM3_REFERENCE), ("stell", STELL2_REFERENCE),
                                           ("permB", PERMB2_REFERENCE)])
def test_matches_reference(quivers, family, expected):
    q = quivers[family]
    assert len(q.arrows) == len(expected)
    assert isomorphic_to(q, expected)


def test_reference_mismatch_detected(quivers):
    wrong = list(PERM3_REFERENCE)
    wrong[0] = (1, 3, {2})
    assert not isomorphic_to(quivers["perm"], wrong)


def test_perm3_point_to_segment(quivers):
    q = quivers["perm"]
    for j in (2, 3, 4):
        labels = q.morphisms[(1, j)]
        assert len(labels) == 2 and all(len(S) == 1 for S in labels)
    assert q.morphisms[(1, 1)] == [frozenset()]
    assert not any(a.src == 1 and a.dst in (5, 6) for a in q.arrows)
    assert not indecomposable(1, 1, frozenset(), q)


def test_stell2_point_to_segment(quivers):
    q = quivers["stell"]
    seg1 = next(i for i in q.nodes if sorted(q.node_polytopes[i].vertices) == [(0, 0), (1, 0)])
    assert sorted(map(sorted, q.morphisms[(1, seg1)])) == [[], [1]]


def test_morphisms_match_translate_containments(quivers):
    for q in quivers.values():
        n = q.n
        for i in q.nodes:
            for j in q.nodes:
                want = sorted(tuple(t) for t in translate_containments(q.node_polytopes[i], q.node_polytopes[j]))
                got = sorted(tuple(1 if k + 1 in S else 0 for k in range(n)) for S in q.morphisms[(i, j)])
                assert got == want


def test_augmented_morphisms_loops_only():
    # src {∅}, dst {∅, {1}} on [2]: S may be ∅ or {1}
    assert sorted(map(sorted, augmented_morphisms(frozenset({0}), frozenset({0, 1}), 2))) == [[], [1]]
    # element 1 is not a loop of src {{1}}; element 2 is
    assert augmented_morphisms(frozenset({1}), frozenset({1, 3}), 2) == [frozenset(), frozenset({2})]
    assert augmented_morphisms(frozenset({1}), frozenset({3}), 2) == [frozenset({2})]


@pytest.mark.parametrize("family", ["perm", "stell", "permB"])
def test_census_and_order(quivers, family):
    q = quivers[family]
    assert hom_census_check(q)
    assert arrows_respect_order(q)
    order = topological_order(q)
    assert order == sorted(order)
    for i in q.nodes:
        assert path_label_census(q, i, i) == {frozenset()}


def test_census_point_to_triangle(quivers):
    q = quivers["perm"]
    tri = q.node_polytopes[5]
    assert len(path_label_census(q, 1, 5)) == len(tri.lattice_points()) == 3


def test_larger_quivers():
    for family, n, arrows in (("perm", 4, 74), ("stell", 3, 43)):
        q = tilting_quiver(build_collection(family, n))
        assert len(q.arrows) == arrows
        assert hom_census_check(q)


@pytest.mark.parametrize("family,group", [("perm", "S2xSn"), ("stell", "S_n"), ("permB", "SnB")])
def test_symmetry(quivers, family, group):
    invariant, admissible = arrow_symmetry_check(quivers[family], group)
    assert invariant and admissible


def test_cycle_detected(quivers):
    q = quivers["stell"]
    bad = Quiver(q.collection, q.kind, q.nodes, q.node_polytopes, q.families, q.morphisms,
                 list(q.arrows) + [type(q.arrows[0])(5, 1, frozenset())])
    with pytest.raises(StructuralError):
        topological_order(bad)


def test_dot_export(quivers):
    dot = export_dot(quivers["perm"])
    assert dot.startswith("digraph ")
    assert dot.count("->") == 12
    for seg in (2, 3, 4):
        outs = sorted(line.split("[")[1] for line in dot.splitlines() if line.startswith(f"  v{seg} -> "))
        assert len(outs) == 2 and 'label="{}"];' in outs
    assert 'v1 -> v2 [label="{2}"];' in dot and 'v1 -> v2 [label="{3}"];' in dot


def test_json_export(quivers):
    js = json.loads(export_json(quivers["stell"]))
    assert [n["id"] for n in js["nodes"]] == [1, 2, 3, 4, 5]
    assert {"src": 1, "dst": 2, "label": []} in js["arrows"]
    assert all(set(a) == {"src", "dst", "label"} for a in js["arrows"])
    assert export_json(quivers["stell"]) == export_json(tilting_quiver(build_collection("stell", 2)))
