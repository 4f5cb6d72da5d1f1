"""Exchange capacities, saturations and the two retractions built from them."""
from __future__ import annotations

from fractions import Fraction

from ..errors import InputError
from ..ratgeom.linalg import vec
from .families import SubmodularFn


def _xsum(x, A):
    return sum(x[i] for i in range(len(x)) if A >> i & 1)


def in_base_polytope(mu: SubmodularFn, x) -> bool:
    full = (1 << mu.n) - 1
    return _xsum(x, full) == mu(full) and all(_xsum(x, A) <= mu(A) for A in range(1 << mu.n))


def in_independence_polytope(mu: SubmodularFn, x) -> bool:
    return all(c >= 0 for c in x) and all(_xsum(x, A) <= mu(A) for A in range(1 << mu.n))


def _check(mu, x, base):
    x = vec(x)
    if len(x) != mu.n:
        raise InputError("point has the wrong length")
    ok = in_base_polytope(mu, x) if base else in_independence_polytope(mu, x)
    if not ok:
        raise InputError("point lies outside the polytope")
    return x


def _capacity(mu, x, i, j):
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    return min(mu(A) - _xsum(x, A) for A in range(1 << mu.n) if A & bi and not A & bj)


def exchange_capacity(mu: SubmodularFn, x, i, j) -> Fraction:
    """c(x, i, j) = min over A with i in A, j not in A of mu(A) - x(A)."""
    if not (1 <= i <= mu.n and 1 <= j <= mu.n) or i == j:
        raise InputError("need distinct i, j in [n]")
    x = _check(mu, x, True)
    return _capacity(mu, x, i, j)


def greedy_retract(mu: SubmodularFn, x):
    """Apply the capacity moves for (i, j), i < j, in lexicographic order."""
    x = list(_check(mu, x, True))
    path = []
    for i in range(1, mu.n + 1):
        for j in range(i + 1, mu.n + 1):
            c = _capacity(mu, x, i, j)
            start = tuple(x)
            x[i - 1] += c
            x[j - 1] -= c
            path.append((start, tuple(x), (i, j), c))
    return tuple(x), path


def saturation(mu: SubmodularFn, x, i) -> Fraction:
    """sat(x, i) = min over A containing i of mu(A) - x(A)."""
    if not 1 <= i <= mu.n:
        raise InputError("i outside [n]")
    x = _check(mu, x, False)
    bi = 1 << (i - 1)
    return min(mu(A) - _xsum(x, A) for A in range(1 << mu.n) if A & bi)


def ib_retract(mu: SubmodularFn, x):
    x = list(_check(mu, x, False))
    for i in range(1, mu.n + 1):
        bi = 1 << (i - 1)
        x[i - 1] += min(mu(A) - _xsum(x, A) for A in range(1 << mu.n) if A & bi)
    return tuple(x)
