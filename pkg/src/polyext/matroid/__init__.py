"""Matroids, delta matroids, Schubert families and polymatroid primitives."""
from .families import (
    SetFamily, Matroid, DeltaMatroid, SubmodularFn, is_matroid, is_delta_matroid,
    mask_of, elems_of, indicator, popcount, base_polytope, base_polytope_mu,
    independence_polytope, feasible_polytope,
)
from .ops import (
    dual, restrict, delete, contract, truncate_to, direct_sum, trivial_extend,
    flip_loops_to_coloops, flip_loops, flip_coloops_to_loops, relabel, loops, coloops,
)
from .schubert import (
    SignedPermutation, schubert_matroid, delta_schubert, enumerate_schubert,
    enumerate_delta_schubert, gale_leq, typeb_gale_leq, standard_delta_schubert,
)
from .submodular import (
    exchange_capacity, greedy_retract, saturation, ib_retract, in_base_polytope,
    in_independence_polytope,
)
