"""Exact rational convex geometry."""
from .linalg import frac, vec
from .polyhedron import (
    AffineForm, Lattice, Polyhedron, lp_feasible, vertices, lattice_points,
    minkowski_sum, minkowski_difference, translate_containments,
)
from .fans import Fan, FanFamily, in_deformation_cone
from .io import polyhedron_to_json, polyhedron_from_json, dumps

__all__ = [
    "frac", "vec", "AffineForm", "Lattice", "Polyhedron", "lp_feasible", "vertices",
    "lattice_points", "minkowski_sum", "minkowski_difference", "translate_containments",
    "Fan", "FanFamily", "in_deformation_cone", "polyhedron_to_json", "polyhedron_from_json", "dumps",
]
