"""Schubert matroids and Schubert delta matroids."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import InputError, CapExceeded
from .families import Matroid, DeltaMatroid, SetFamily, mask_of, indicator

FILTERS = ("all", "loopless", "loopless_and_coloopless")
DEFAULT_CAPS = {"schubert_n": 5, "delta_schubert_n": 3}


def _check_perm(w, n=None):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InputError(f"{w} is not a permutation of [{len(w)}]")
    if n is not None and len(w) != n:
        raise InputError("permutation length differs from n")
    return w


def gale_leq(S, T, w) -> bool:
    """S <=_w T for equal-size subsets, in the order w(1) < w(2) < ... ."""
    pos = {e: k for k, e in enumerate(w)}
    a = sorted(pos[e] for e in S)
    b = sorted(pos[e] for e in T)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def schubert_matroid(w, S, k=None) -> Matroid:
    w = _check_perm(w)
    n = len(w)
    S = tuple(sorted(S))
    if k is not None and k != len(S):
        raise InputError("k must equal |S|")
    if any(e < 1 or e > n for e in S):
        raise InputError("S not inside [n]")
    bases = [T for T in itertools.combinations(range(1, n + 1), len(S)) if gale_leq(S, T, w)]
    return Matroid.from_bases(n, bases)


@dataclass(frozen=True)
class SignedPermutation:
    images: tuple

    def __post_init__(self):
        im = tuple(int(x) for x in self.images)
        if sorted(abs(x) for x in im) != list(range(1, len(im) + 1)):
            raise InputError(f"{im} is not a signed permutation")
        object.__setattr__(self, "images", im)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def act(self, x):
        """Coordinate action: e_i -> sign(w(i)) e_|w(i)|."""
        y = [0] * self.n
        for i, wi in enumerate(self.images):
            y[abs(wi) - 1] = x[i] if wi > 0 else -x[i]
        return tuple(y)

    @property
    def negated(self):
        """T = {|w(i)| : w(i) < 0}."""
        return tuple(sorted(abs(x) for x in self.images if x < 0))

    @classmethod
    def all(cls, n):
        for p in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                yield cls(tuple(s * x for s, x in zip(signs, p)))


def typeb_gale_leq(A, B) -> bool:
    """A <= B: |A| = j <= k = |B| and a_{j-i} <= b_{k-i} for i = 0..j-1."""
    a, b = sorted(A), sorted(B)
    j, k = len(a), len(b)
    if j > k:
        return False
    return all(a[j - 1 - i] <= b[k - 1 - i] for i in range(j))


def standard_delta_schubert(n, S) -> list:
    S = tuple(sorted(S))
    out = []
    for r in range(n + 1):
        for T in itertools.combinations(range(1, n + 1), r):
            if typeb_gale_leq(T, S):
                out.append(T)
    return out


def delta_schubert(w, S) -> DeltaMatroid:
    if not isinstance(w, SignedPermutation):
        w = SignedPermutation(tuple(w))
    n = w.n
    if any(e < 1 or e > n for e in S):
        raise InputError("S not inside [n]")
    shift = indicator(mask_of(w.negated), n)
    feas = []
    for F in standard_delta_schubert(n, S):
        y = w.act(indicator(mask_of(F), n))
        y = tuple(a + b for a, b in zip(y, shift))
        if any(c not in (0, 1) for c in y):
            raise AssertionError("transformed feasible polytope left the unit cube")
        feas.append(sum(1 << i for i, c in enumerate(y) if c))
    return DeltaMatroid(SetFamily(n, tuple(feas)))


def _filter_ok(M, filt):
    if filt == "all":
        return True
    if filt == "loopless":
        return M.loops == 0
    if filt == "loopless_and_coloopless":
        return M.loops == 0 and M.coloops == 0
    raise InputError(f"unknown filter {filt!r}")


def enumerate_schubert(n, filter="all", caps=None):
    cap = (caps or DEFAULT_CAPS).get("schubert_n", DEFAULT_CAPS["schubert_n"])
    if n > cap:
        raise CapExceeded(f"Schubert enumeration capped at n <= {cap}")
    if n < 0:
        raise InputError("n must be nonnegative")
    if filter not in FILTERS:
        raise InputError(f"unknown filter {filter!r}")
    seen = {}
    for w in itertools.permutations(range(1, n + 1)):
        for r in range(n + 1):
            for S in itertools.combinations(range(1, n + 1), r):
                M = schubert_matroid(w, S)
                if M.bases not in seen and _filter_ok(M, filter):
                    seen[M.bases] = M
    return sorted(seen.values(), key=lambda M: M.sort_key())


def enumerate_delta_schubert(n, filter="all", caps=None):
    cap = (caps or DEFAULT_CAPS).get("delta_schubert_n", DEFAULT_CAPS["delta_schubert_n"])
    if n > cap:
        raise CapExceeded(f"delta Schubert enumeration capped at n <= {cap}")
    if n < 0:
        raise InputError("n must be nonnegative")
    if filter not in FILTERS:
        raise InputError(f"unknown filter {filter!r}")
    seen = {}
    subsets = [S for r in range(n + 1) for S in itertools.combinations(range(1, n + 1), r)]
    for w in SignedPermutation.all(n):
        for S in subsets:
            D = delta_schubert(w, S)
            if D.feasible not in seen and _filter_ok(D, filter):
                seen[D.feasible] = D
    return sorted(seen.values(), key=lambda D: D.sort_key())
