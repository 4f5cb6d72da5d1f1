"""Seeded verification suites shared by the CLI and the test-suite."""
from __future__ import annotations

import itertools
import random

from .ratgeom import FanFamily, Polyhedron
from .homology import set_difference_cohomology, shifted_complement_cohomology_oracle, ext_table
from .homology.ext import translation_range
from .cwcomplex import brianchon_gram, check_exactness_tstalks, derksen_fink_decompose
from .matroid import Matroid, SetFamily, is_matroid, base_polytope
from .samples import random_gp, random_typeb, random_box, random_translate


def oracle_agreement(count=100, seed=0, kind="gp"):
    """Nerve method vs epsilon-shift oracle over every relevant translation."""
    rng = random.Random(seed)
    cases = 0
    disagreements = []
    for _ in range(count):
        if kind == "gp":
            n = rng.choice([2, 3])
            P = random_translate(random_gp(n, rng, rng.randint(1, 2)), rng, 1)
            Q = random_translate(random_gp(n, rng, rng.randint(1, 2)), rng, 1)
        else:
            P = random_typeb(2, rng, rng.randint(1, 3))
            Q = random_translate(random_typeb(2, rng, rng.randint(1, 3)), rng, 1)
        for m in translation_range(P, Q):
            a = set_difference_cohomology(P, Q, m)
            b = shifted_complement_cohomology_oracle(P, Q, m)
            cases += 1
            if a != b:
                disagreements.append({"P": repr(P), "Q": repr(Q), "m": list(m),
                                      "nerve": repr(a), "oracle": repr(b)})
    return {"suite": f"oracle-{kind}", "pairs": count, "cases": cases,
            "disagreements": disagreements, "passed": not disagreements}


def bg_stalks(count=50, seed=0):
    """Augmented Brianchon-Gram complexes of random polygons are stalk-exact."""
    rng = random.Random(seed)
    failures = []
    done = 0
    for k in range(count):
        if k % 2 == 0:
            fam, P = FanFamily("ProductP1", 2), random_box(2, rng)
        else:
            fam, P = FanFamily("BraidA", 3), random_translate(random_gp(3, rng, rng.randint(1, 3)), rng, 1)
        ok, rep = check_exactness_tstalks(brianchon_gram(P, fam))
        done += 1
        if not ok:
            failures.append({"P": repr(P), "fan": str(fam), "stalks": rep["failures"][:3]})
    return {"suite": "bg-stalks", "complexes": done, "failures": failures, "passed": not failures}


def all_matroids(n):
    """Every matroid on [n], by brute force over families of equal-size subsets."""
    out = []
    for k in range(n + 1):
        ksets = [sum(1 << i for i in c) for c in itertools.combinations(range(n), k)]
        for r in range(1, len(ksets) + 1):
            for fam in itertools.combinations(ksets, r):
                if is_matroid(SetFamily(n, tuple(fam))):
                    out.append(Matroid.from_masks(n, fam))
    return out


def derksen_fink_identity(M, box=(-1, 2)):
    """1_{BP(M)} equals the alternating sum of Schubert indicators at every lattice point."""
    expr = derksen_fink_decompose(M)
    P = base_polytope(M)
    bad = []
    for x in itertools.product(range(box[0], box[1] + 1), repeat=M.n):
        lhs = 1 if P.contains(x) else 0
        if expr(x) != lhs:
            bad.append(list(x))
    return not bad, bad, expr


def derksen_fink_suite(n_exhaustive=3, n_random=4, count=100, seed=0):
    rng = random.Random(seed)
    failures = []
    checked = 0
    for M in all_matroids(n_exhaustive):
        ok, bad, _ = derksen_fink_identity(M)
        checked += 1
        if not ok:
            failures.append({"matroid": M.to_json(), "points": bad[:5]})
    pool = all_matroids(n_random)
    memo = {}
    for _ in range(count):
        M = rng.choice(pool)
        if M.bases not in memo:
            memo[M.bases] = derksen_fink_identity(M)
        ok, bad, _ = memo[M.bases]
        checked += 1
        if not ok:
            failures.append({"matroid": M.to_json(), "points": bad[:5]})
    return {"suite": "derksen-fink", "matroids": checked, "pool_size": len(pool),
            "failures": failures, "passed": not failures}


def certificate_suite(count=20, seed=0):
    from .collections import build_collection, fullness_certificate, verify_certificate

    rng = random.Random(seed)
    perm3 = build_collection("perm", 3)
    perm4 = build_collection("perm", 4)
    targets = [("pi_3", perm3, Polyhedron.from_vertices(list(itertools.permutations((0, 1, 2)))))]
    d24 = base_polytope(Matroid.uniform(2, 4))
    targets.append(("Delta_24", perm4, d24))
    for k in range(3):
        targets.append((f"Delta_24+t{k}", perm4, random_translate(d24, rng)))
    for k in range(count):
        P = random_gp(3, rng, 2)
        targets.append((f"gp{k}", perm3, P))
    results = []
    for name, coll, T in targets:
        rep = verify_certificate(fullness_certificate(None, None, T, collection=coll))
        results.append({"target": name, **{k: rep[k] for k in ("passed", "internal_complexes", "leaves", "max_stage")}})
    return {"suite": "certificates", "targets": len(results), "results": results,
            "passed": all(r["passed"] for r in results)}


def cp1_suite(kmax=5):
    """h^0(O(k)) = k+1 and h^1(O(-k)) = k-1 on the projective line."""
    rows = []
    pt = Polyhedron.point((0,))
    for k in range(0, kmax + 1):
        seg = Polyhedron.from_vertices([(0,), (k,)])
        h0 = ext_table(pt, seg).totals()
        rows.append({"k": k, "h0": h0.get(0, 0), "lattice": len(seg.lattice_points()), "want": k + 1})
        if k >= 1:
            h1 = ext_table(seg, pt).totals()
            direct = sum(set_difference_cohomology(seg, pt, (m,))[0] for m in range(1, k))
            rows.append({"k": -k, "h1": h1.get(1, 0), "direct": direct, "want": k - 1})
    ok = all((r.get("h0", r.get("h1")) == r["want"]) and r.get("lattice", r["want"]) == r["want"]
             and r.get("direct", r["want"]) == r["want"] for r in rows)
    return {"suite": "cp1", "rows": rows, "passed": ok}


SUITES = {
    "oracle-gp": lambda count, seed: oracle_agreement(count or 100, seed, "gp"),
    "oracle-b2": lambda count, seed: oracle_agreement(count or 50, seed, "b2"),
    "bg-stalks": lambda count, seed: bg_stalks(count or 50, seed),
    "derksen-fink": lambda count, seed: derksen_fink_suite(count=count or 100, seed=seed),
    "certificates": lambda count, seed: certificate_suite(count or 20, seed),
    "cp1": lambda count, seed: cp1_suite(count or 5),
}
