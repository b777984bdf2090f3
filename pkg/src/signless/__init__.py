"""Signless Laplacian top-k eigenvalue sums and the bound S_k^+(G) <= e(G) + C(k+1, 2).

Exact integer characteristic polynomials back every close comparison; float
Jacobi spectra handle the rest.
"""

from .graph import Graph, GraphError, from_edges, graph_class
from .spectral import q_spectrum, l_spectrum, s_plus, s_lap
from .charpoly import Verdict, char_poly_q, certify_topk_sum_leq, certify_eigenvalue_position
from .bounds import best_applicable, conjecture_rhs
from .families import build as build_family
from .verify import check_conjecture, sweep

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "from_edges", "graph_class",
    "q_spectrum", "l_spectrum", "s_plus", "s_lap",
    "Verdict", "char_poly_q", "certify_topk_sum_leq", "certify_eigenvalue_position",
    "best_applicable", "conjecture_rhs", "build_family", "check_conjecture", "sweep",
]
