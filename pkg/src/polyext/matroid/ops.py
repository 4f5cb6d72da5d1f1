"""Standard matroid and delta-matroid operations.

The ground set always stays [n]: deleted or contracted elements become loops,
so results can be compared with the original as 0/1 polytopes in the same space.
"""
from __future__ import annotations

from ..errors import InputError
from .families import Matroid, DeltaMatroid, SetFamily, popcount, mask_of


def _subset_mask(S, n) -> int:
    if isinstance(S, int):
        raise InputError("pass subsets as collections of elements, not bitmasks")
    m = mask_of(S)
    if m >= 1 << n:
        raise InputError(f"{sorted(S)} is not a subset of [{n}]")
    return m


def loops(M):
    return M.loops


def coloops(M):
    return M.coloops


def dual(M: Matroid) -> Matroid:
    full = (1 << M.n) - 1
    return Matroid.from_masks(M.n, [full & ~b for b in M.bases])


def restrict(M, S):
    s = _subset_mask(S, M.n)
    if isinstance(M, DeltaMatroid):
        fam = M.feasible
        for e in range(M.n):
            bit = 1 << e
            if s & bit:
                continue
            if all(f & bit for f in fam):
                fam = [f & ~bit for f in fam]
            else:
                fam = [f for f in fam if not f & bit]
        return DeltaMatroid(SetFamily(M.n, tuple(fam)))
    cut = {b & s for b in M.bases}
    r = max(popcount(c) for c in cut)
    return Matroid.from_masks(M.n, [c for c in cut if popcount(c) == r])


def delete(M, S):
    s = _subset_mask(S, M.n)
    keep = [e for e in range(1, M.n + 1) if not s & (1 << (e - 1))]
    return restrict(M, keep)


def contract(M: Matroid, T) -> Matroid:
    t = _subset_mask(T, M.n)
    r = M.rank_of(t)
    return Matroid.from_masks(M.n, {b & ~t for b in M.bases if popcount(b & t) == r})


def truncate_to(M: Matroid, k: int) -> Matroid:
    if not 0 <= k <= M.rank:
        raise InputError(f"cannot truncate a rank-{M.rank} matroid to rank {k}")
    return Matroid.from_masks(M.n, [i for i in M.independent_sets() if popcount(i) == k])


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    return Matroid.from_masks(M1.n + M2.n, [a | (b << M1.n) for a in M1.bases for b in M2.bases])


def trivial_extend(M, n: int):
    if n < M.n:
        raise InputError("extension must not shrink the ground set")
    fam = SetFamily(n, M.family.sets)
    return Matroid(fam) if isinstance(M, Matroid) else DeltaMatroid(fam)


def flip_loops_to_coloops(M, S):
    s = _subset_mask(S, M.n)
    if s & ~M.loops:
        raise InputError("only loops can be flipped to coloops")
    sets = [b | s for b in M.family.sets]
    return Matroid.from_masks(M.n, sets) if isinstance(M, Matroid) else DeltaMatroid(SetFamily(M.n, tuple(sets)))


flip_loops = flip_loops_to_coloops


def flip_coloops_to_loops(M, S):
    s = _subset_mask(S, M.n)
    if s & ~M.coloops:
        raise InputError("only coloops can be flipped to loops")
    sets = [b & ~s for b in M.family.sets]
    return Matroid.from_masks(M.n, sets) if isinstance(M, Matroid) else DeltaMatroid(SetFamily(M.n, tuple(sets)))


def relabel(M, perm):
    """Image under the bijection i -> perm[i-1] of [n]."""
    n = M.n
    if sorted(perm) != list(range(1, n + 1)):
        raise InputError("not a permutation")

    def img(m):
        out = 0
        for i in range(n):
            if m >> i & 1:
                out |= 1 << (perm[i] - 1)
        return out

    sets = [img(b) for b in M.family.sets]
    return Matroid.from_masks(n, sets) if isinstance(M, Matroid) else DeltaMatroid(SetFamily(n, tuple(sets)))
