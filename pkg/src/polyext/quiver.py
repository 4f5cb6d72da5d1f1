"""Quivers of sections: augmented inclusions, weak maps and delta inclusions between
the 0/1 polytopes indexing a collection."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import InputError, StructuralError
from .ratgeom import translate_containments
from .collections.core import Collection
from .collections.symmetry import group_generators, symmetry_orbit_check, orbits

KINDS = {"BraidA": "inclusion", "Stellahedral": "weak_map", "TypeB": "delta_inclusion"}


@dataclass(frozen=True)
class AugMorphism:
    src: int
    dst: int
    label: frozenset  # 1-based elements

    def to_json(self):
        return {"src": self.src, "dst": self.dst, "label": sorted(self.label)}


def _lower_corner(P):
    V = P.vertices
    return tuple(min(v[i] for v in V) for i in range(P.ambient))


def node_polytope(P):
    """Translate with lower corner at the origin: loops instead of coloops, so the
    indexing (delta) matroid is coloopless; independence polytopes are unchanged."""
    return P.translate(tuple(-x for x in _lower_corner(P)))


def node_family(P):
    """Bases / independent sets / feasible sets as bitmasks: the lattice points of a 0/1 polytope."""
    pts = P.lattice_points()
    if any(x not in (0, 1) for p in pts for x in p):
        raise InputError("quiver nodes must be 0/1 polytopes")
    return frozenset(sum(1 << i for i, x in enumerate(p) if x) for p in pts)


def augmented_morphisms(src_family, dst_family, n):
    """All S inside the loops of src with B | S in dst for every B in src."""
    used = 0
    for B in src_family:
        used |= B
    loops = [i for i in range(n) if not used >> i & 1]
    out = []
    for r in range(len(loops) + 1):
        for S in itertools.combinations(loops, r):
            m = sum(1 << i for i in S)
            if all((B | m) in dst_family for B in src_family):
                out.append(frozenset(i + 1 for i in S))
    return out


@dataclass
class Quiver:
    collection: Collection
    kind: str
    nodes: list
    node_polytopes: dict
    families: dict
    morphisms: dict
    arrows: list = field(default_factory=list)

    @property
    def n(self):
        return self.collection.fan.n

    def arrow_set(self):
        return {(a.src, a.dst, a.label) for a in self.arrows}

    def to_json(self):
        return {
            "kind": self.kind,
            "nodes": [
                {"id": i, "vertices": [[int(x) for x in v] for v in self.node_polytopes[i].vertices],
                 "shift_from_item": [int(x) for x in _lower_corner(self.collection.item(i).polytope)]}
                for i in self.nodes
            ],
            "arrows": [a.to_json() for a in self.arrows],
        }


def indecomposable(src, dst, label, q: Quiver) -> bool:
    if src == dst:
        return False
    for k in q.nodes:
        if k in (src, dst):
            continue
        for S1 in q.morphisms[(src, k)]:
            if not S1 <= label:
                continue
            rest = label - S1
            if rest in q.morphisms[(k, dst)]:
                return False
    return True


def tilting_quiver(c: Collection, kind=None) -> Quiver:
    kind = kind or KINDS.get(c.fan.tag)
    if kind not in KINDS.values():
        raise InputError(f"no quiver convention for {c.fan}")
    n = c.fan.n
    polys = {it.id: node_polytope(it.polytope) for it in c.items}
    fams = {i: node_family(P) for i, P in polys.items()}
    nodes = [it.id for it in c.items]
    mor = {(i, j): augmented_morphisms(fams[i], fams[j], n) for i in nodes for j in nodes}
    q = Quiver(c, kind, nodes, polys, fams, mor)
    arrows = []
    for i in nodes:
        for j in nodes:
            for S in mor[(i, j)]:
                if indecomposable(i, j, S, q):
                    arrows.append(AugMorphism(i, j, S))
    arrows.sort(key=lambda a: (a.src, a.dst, len(a.label), sorted(a.label)))
    q.arrows = arrows
    return q


def topological_order(q: Quiver):
    indeg = {i: 0 for i in q.nodes}
    for a in q.arrows:
        indeg[a.dst] += 1
    ready = sorted(i for i, d in indeg.items() if d == 0)
    out = []
    while ready:
        i = ready.pop(0)
        out.append(i)
        for a in q.arrows:
            if a.src == i:
                indeg[a.dst] -= 1
                if indeg[a.dst] == 0:
                    ready.append(a.dst)
                    ready.sort()
    if len(out) != len(q.nodes):
        raise StructuralError("quiver has a directed cycle")
    return out


def path_label_census(q: Quiver, i, j):
    """Distinct label unions of directed paths i -> j whose labels stay disjoint."""
    order = topological_order(q)
    reach = {k: set() for k in q.nodes}
    reach[i] = {frozenset()}
    for k in order:
        if not reach[k]:
            continue
        for a in q.arrows:
            if a.src == k:
                for L in reach[k]:
                    if not (L & a.label):
                        reach[a.dst].add(L | a.label)
    return reach[j]


def hom_census_check(q: Quiver) -> bool:
    """Path-algebra dimension equals Hom dimension for every ordered pair."""
    for i in q.nodes:
        for j in q.nodes:
            want = {frozenset(k + 1 for k, x in enumerate(m) if x)
                    for m in translate_containments(q.node_polytopes[i], q.node_polytopes[j])}
            if path_label_census(q, i, j) != want:
                return False
    return True


def arrows_respect_order(q: Quiver) -> bool:
    return all(a.src < a.dst for a in q.arrows)


def arrow_symmetry_check(q: Quiver, group):
    """Generators carry arrows to arrows; and no arrow joins two nodes of one orbit."""
    ok, maps = symmetry_orbit_check(q.collection, group)
    if not ok:
        return False, False
    arrows = q.arrow_set()
    invariant = True
    for name, g in group_generators(group, q.n):
        img = maps[name]
        shift = {}
        for i in q.nodes:
            gp = q.node_polytopes[i].map_points(g)
            shift[i] = _lower_corner(gp)
        for (i, j, S) in arrows:
            e = tuple(1 if k + 1 in S else 0 for k in range(q.n))
            v = tuple(a + b - c for a, b, c in zip(g(e), shift[i], shift[j]))
            if any(x not in (0, 1) for x in v):
                invariant = False
                continue
            S2 = frozenset(k + 1 for k, x in enumerate(v) if x)
            if (img[i - 1], img[j - 1], S2) not in arrows:
                invariant = False
    orbit_of = {}
    for k, orb in enumerate(orbits(q.collection, group)):
        for i in orb:
            orbit_of[i] = k
    admissible = all(orbit_of[i] != orbit_of[j] for (i, j, _) in arrows)
    return invariant, admissible


def isomorphic_to(q: Quiver, expected, num_nodes=None) -> bool:
    """Equality with an expected labelled arrow list [(src, dst, labels)] after
    renumbering nodes; labels are compared literally."""
    exp = sorted((s, d, frozenset(L)) for s, d, L in expected)
    num_nodes = num_nodes or len(q.nodes)
    if num_nodes != len(q.nodes) or len(exp) != len(q.arrows):
        return False
    mine = q.arrow_set()

    def sig(arrs, v):
        outs = sorted((len(L), tuple(sorted(L))) for s, d, L in arrs if s == v)
        ins = sorted((len(L), tuple(sorted(L))) for s, d, L in arrs if d == v)
        return (tuple(outs), tuple(ins))

    exp_nodes = sorted({x for a in exp for x in a[:2]} | set(range(1, num_nodes + 1)))
    cand = {v: [w for w in q.nodes if sig(mine, w) == sig(exp, v)] for v in exp_nodes}

    def bt(k, assign, used):
        if k == len(exp_nodes):
            return {(assign[s], assign[d], L) for s, d, L in exp} == mine
        v = exp_nodes[k]
        for w in cand[v]:
            if w not in used:
                assign[v] = w
                used.add(w)
                if bt(k + 1, assign, used):
                    return True
                used.discard(w)
                del assign[v]
        return False

    return bt(0, {}, set())


def export_dot(q: Quiver) -> str:
    lines = [f"digraph {q.collection.name or 'Q'} {{"]
    for i in q.nodes:
        lines.append(f'  v{i} [label="{i}"];')
    for a in q.arrows:
        lab = "{" + ",".join(str(x) for x in sorted(a.label)) + "}"
        lines.append(f'  v{a.src} -> v{a.dst} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(q: Quiver) -> str:
    return json.dumps(q.to_json(), sort_keys=True, separators=(",", ":"))
