"""Exceptional collections of polytopes and their verification."""
from .core import (
    Item, Collection, FAMILIES, make_collection, build_collection, ext_tables,
    verify_strong_exceptionality, euler_pairing_matrix, is_unitriangular,
    order_is_linear_extension, order_key,
)
from .symmetry import (
    GROUPS, group_generators, symmetry_orbit_check, orbits, is_generic, cuspidal_subcollection,
    forgetful_compatibility, derangements, signed_derangements, constant_coordinates,
)
from .certificates import (
    CertNode, FullnessCertificate, fullness_certificate, verify_certificate, cube_slices,
)
from .gallery import classical_gallery, projective, hirzebruch, hirzebruch_polytopes, type_c_probe
