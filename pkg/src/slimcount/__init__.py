"""Exact enumeration of slim, semimodular lattices through permutations.

A permutation of degree h encodes a planar slim, semimodular diagram of
length h with ``h + 1 + inv`` elements; permutations in the same block
(segment-wise equal or inverse) give isomorphic lattices.
"""
from .counting import (
    CountTable, block_table, count_distributive_diagrams, count_ssd, count_ssl,
    involution_table, irreducible_involution_table, irreducible_table, perm_table,
)
from .grid import build_lattice, build_quotient, quotient_size_formula, source_cells
from .kernels import BACKEND
from .lattice import FiniteLattice, is_distributive, is_semimodular, is_slim, join_irreducibles
from .perm import (
    BlockForm, PartialPermutation, Permutation, avoids_321, block_canonical, head_body,
    inverse, inversions, is_involution, is_irreducible, partial_inversions, segments,
)

__version__ = "0.1.0"
