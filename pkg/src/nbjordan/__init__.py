"""Exact Jordan-structure analysis of the non-backtracking matrix.

The package constructs the non-backtracking matrix B of a simple connected
graph together with the smaller companion matrix K = [[A, D-I], [-I, 0]],
the block form M = diag(K, I, -I) and the transport matrix X = [S T^T R]
with B X = X M, and determines their Jordan block structure entirely in
exact arithmetic (integers, rationals, and explicit quadratic number
fields).  On top sit constructions of graph families with defective
eigenvalues, chain certificates, theorem verification suites, and a survey
driver that reproduces published defectiveness counts over graph6 streams.
"""

from .errors import DomainError, InputError, StructureError
from .graphs import Graph, arc_index, encode_graph6, parse_graph6

__all__ = [
    "DomainError",
    "InputError",
    "StructureError",
    "Graph",
    "arc_index",
    "encode_graph6",
    "parse_graph6",
]

__version__ = "0.1.0"
