"""Exact distance characteristic polynomials of threshold graphs."""
from .charpoly import CharPolyResult, Multiplicities, full_charpoly, multiplicities, q_formula, quotient_matrix
from .cospectral import CospectralPair, search, theorem2_check, theorem2_generate
from .exactpoly import IntPolynomial
from .oracle import charpoly_exact, verify_graph
from .seqcore import BlockSequence, CreationSequence, IntMatrix, distance_matrix, parse_sequence, to_blocks

__version__ = "0.1.0"
