"""Seeded random lattice polytopes in the deformation cones used by the test suites."""
from __future__ import annotations

import itertools
import random

from .ratgeom import Polyhedron, minkowski_sum


def _simplex_on(S, n):
    return Polyhedron.from_vertices([tuple(1 if j == i else 0 for j in range(n)) for i in S])


def random_gp(n, rng: random.Random, summands=2):
    """Minkowski sum of coordinate simplices Delta_S for random nonempty S."""
    P = Polyhedron.point((0,) * n)
    for _ in range(summands):
        k = rng.randint(1, n)
        S = sorted(rng.sample(range(n), k))
        P = minkowski_sum(P, _simplex_on(S, n))
    return P


def random_typeb(n, rng: random.Random, summands=2):
    """Minkowski sum of random segments along the type-B root directions."""
    dirs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            dirs.append(tuple(1 if k == i else (s if k == j else 0) for k in range(n)))
    P = Polyhedron.point((0,) * n)
    for _ in range(summands):
        d = rng.choice(dirs)
        P = minkowski_sum(P, Polyhedron.from_vertices([(0,) * n, d]))
    if rng.random() < 0.5:
        k = rng.randint(1, n)
        P = minkowski_sum(P, _simplex_on(sorted(rng.sample(range(n), k)), n))
    return P


def random_box(n, rng: random.Random, max_side=2):
    lo = [rng.randint(-1, 1) for _ in range(n)]
    hi = [a + rng.randint(0, max_side) for a in lo]
    return Polyhedron.from_vertices(list(itertools.product(*[(a, b) for a, b in zip(lo, hi)])))


def random_translate(P, rng: random.Random, spread=2):
    return P.translate(tuple(rng.randint(-spread, spread) for _ in range(P.ambient)))
