"""Exact polytope computations for nef line bundles on toric varieties."""
__version__ = "0.1.0"
