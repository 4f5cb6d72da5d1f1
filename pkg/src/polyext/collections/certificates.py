"""Fullness certificates: trees of exact complexes ending in collection translates.

Stage 2 cuts a target into unit-cube slices (subdivision Koszul complex), stage 1
resolves a 0/1 slice by a truncated Brianchon-Gram complex, stage 0 is a leaf.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import floor, ceil

from ..errors import InputError, StructuralError
from ..ratgeom import Polyhedron, in_deformation_cone, polyhedron_to_json
from ..cwcomplex import subdivision_koszul, truncated_bg, tensor_translate, check_exactness_tstalks
from .core import Collection, build_collection

MAX_DEPTH = 40
MAX_SLICES = 6


@dataclass
class CertNode:
    polytope: Polyhedron
    stage: int
    leaf_id: int = None
    translation: tuple = None
    complex: object = None
    target_index: int = None
    children: list = field(default_factory=list)

    def to_json(self):
        d = {"stage": self.stage, "polytope": polyhedron_to_json(self.polytope)}
        if self.stage == 0:
            d["leaf"] = self.leaf_id
            d["translation"] = [str(x) for x in self.translation]
        else:
            d["complex"] = self.complex.name
            d["terms"] = {str(k): v for k, v in self.complex.terms().items()}
            d["children"] = [ch.to_json() for ch in self.children]
        return d

    def nodes(self):
        seen = {}
        stack = [self]
        while stack:
            x = stack.pop()
            if id(x) in seen:
                continue
            seen[id(x)] = x
            stack.extend(x.children)
        return list(seen.values())

    def depth(self):
        return self.stage


@dataclass
class FullnessCertificate:
    target: Polyhedron
    root: CertNode
    collection: Collection

    def leaves(self):
        return [x for x in self.root.nodes() if x.stage == 0]

    def internal(self):
        return [x for x in self.root.nodes() if x.stage > 0]

    def to_json(self):
        return {"target": polyhedron_to_json(self.target), "collection": self.collection.name,
                "tree": self.root.to_json()}


def _lower_corner(P):
    V = P.vertices
    return tuple(min(v[i] for v in V) for i in range(P.ambient))


def _in_unit_cube(P):
    V = P.vertices
    return all(max(v[i] for v in V) - min(v[i] for v in V) <= 1 for i in range(P.ambient))


def _truncator(family, Q0):
    """Smallest standard 0/1 polytope containing a 0/1 piece: a hypersimplex slice of the
    cube for the braid fan, the cube otherwise."""
    n = Q0.ambient
    cube = Polyhedron.cube(n)
    if family.tag == "BraidA":
        k = sum(Q0.vertices[0])
        return Polyhedron.from_vertices([v for v in itertools.product((0, 1), repeat=n) if sum(v) == k])
    return cube


def cube_slices(P):
    """Nonempty P cap (c + [0,1]^n) of full relative dimension, c integral."""
    V = P.vertices
    n = P.ambient
    ranges = [range(floor(min(v[i] for v in V)), max(floor(min(v[i] for v in V)) + 1,
                                                   ceil(max(v[i] for v in V)))) for i in range(n)]
    d = P.dim
    out = []
    for c in itertools.product(*ranges):
        box = Polyhedron.cube(n).translate(c)
        S = P.intersect(box)
        if not S.is_empty and S.dim == d:
            out.append(S)
    return out


def halve(P):
    """Cut P along an integer hyperplane x_i = c through its widest coordinate."""
    V = P.vertices
    n = P.ambient
    widths = [(max(v[i] for v in V) - min(v[i] for v in V), -i) for i in range(n)]
    w, negi = max(widths)
    i = -negi
    lo = min(v[i] for v in V)
    c = floor(lo) + max(1, int(w) // 2)
    row = tuple(1 if j == i else 0 for j in range(n))
    left = P.intersect(Polyhedron.from_hrep([(row, c)], ambient=n, bounded=False))
    right = P.intersect(Polyhedron.from_hrep([(tuple(-x for x in row), -c)], ambient=n, bounded=False))
    return [left, right]


class _Builder:
    def __init__(self, coll: Collection):
        self.coll = coll
        self.fan = coll.fan
        self.memo = {}

    def certify(self, Q, depth=0):
        if Q in self.memo:
            return self.memo[Q]
        if depth > MAX_DEPTH:
            raise StructuralError("certificate recursion too deep")
        ident = self.coll.find_translate(Q)
        if ident is not None:
            base = self.coll.item(ident).polytope
            t = tuple(a - b for a, b in zip(Q.vertices[0], base.vertices[0]))
            node = CertNode(Q, 0, leaf_id=ident, translation=t)
        elif _in_unit_cube(Q):
            c = _lower_corner(Q)
            Q0 = Q.translate(tuple(-x for x in c))
            cx = truncated_bg(Q0, _truncator(self.fan, Q0), self.fan, check_labels=False)
            cx = tensor_translate(cx, c)
            node = CertNode(Q, 1, complex=cx, target_index=cx.poset.bottom)
        else:
            pieces = cube_slices(Q)
            if len(pieces) > MAX_SLICES:
                pieces = halve(Q)
            if len(pieces) < 2:
                raise StructuralError("cube slicing did not split the target")
            cx = subdivision_koszul(pieces, Q, name="cube-slices")
            top = cx.poset.elements.index(frozenset(range(len(pieces))))
            node = CertNode(Q, 2, complex=cx, target_index=top)
        self.memo[Q] = node
        if node.stage:
            for i in node.complex.alive:
                L = node.complex.labels[i]
                if i == node.target_index:
                    continue
                if L == Q:
                    raise StructuralError("complex resolves the target by itself")
                node.children.append(self.certify(L, depth + 1))
        return node


def fullness_certificate(family, n, target, collection=None, caps=None) -> FullnessCertificate:
    coll = collection or build_collection(family, n, caps)
    if target.ambient != coll.fan.n:
        raise InputError("target lives in the wrong dimension")
    if target.is_empty or not target.bounded:
        raise InputError("target must be a nonempty polytope")
    if not in_deformation_cone(target, coll.fan):
        raise InputError(f"target is not in Def({coll.fan})")
    root = _Builder(coll).certify(target)
    return FullnessCertificate(target, root, coll)


def verify_certificate(cert: FullnessCertificate) -> dict:
    failures = []
    internal = cert.internal()
    for node in internal:
        cx = node.complex
        if cx.labels[node.target_index] != node.polytope:
            failures.append({"polytope": repr(node.polytope), "reason": "target label mismatch"})
            continue
        cx.check_order_preserving()
        ok, rep = check_exactness_tstalks(cx)
        if not ok:
            failures.append({"polytope": repr(node.polytope), "reason": "not exact",
                             "stalks": rep["failures"][:5]})
    leaves = cert.leaves()
    for leaf in leaves:
        base = cert.collection.item(leaf.leaf_id).polytope
        if base.translate(leaf.translation) != leaf.polytope:
            failures.append({"polytope": repr(leaf.polytope), "reason": "leaf is not a translate"})
    return {
        "passed": not failures,
        "internal_complexes": len(internal),
        "leaves": len(leaves),
        "max_stage": cert.root.stage,
        "failures": failures,
    }
