"""Reduced cohomology of polytope set differences and Ext tables."""
from .simplicial import SimplicialComplex, BettiTable, reduced_cohomology
from .nerve import ViolationCover, nerve_of_violation_cover, set_difference_cohomology
from .oracle import shifted_complement_cohomology_oracle
from .ext import ext_table, translation_range
