"""Explicit Hamilton cycles in the middle levels graph.

The graph G_n has as vertices all bitstrings of length 2n+1 with n or n+1
ones, adjacent when they differ in one bit. ``assemble(n)`` builds a Hamilton
cycle by joining the cycles of a lexical-matching 2-factor with 6-cycle gadgets.
"""

from .assembly import HamiltonCycle, apply_six_cycles, assemble
from .dyck import (
    canonic_decompose,
    enumerate_dyck,
    is_dyck,
    is_dyck_minus,
    rev_complement,
    rotate,
)
from .errors import (
    ConsistencyError,
    DomainError,
    ParseError,
    SizeLimitError,
    StructuralError,
)
from .forest import build_aux_graph, path_to_star, spanning_tree, star
from .gadgets import enumerate_flippable_pairs, six_cycle, tau_sequences
from .matching import build_two_factor, match_M, match_M_inv, match_N, match_N_inv
from .sigma import last_vertex, path_vertices, sigma
from .verify import VerifyReport, verify_cycle

__all__ = [
    "ConsistencyError",
    "DomainError",
    "HamiltonCycle",
    "ParseError",
    "SizeLimitError",
    "StructuralError",
    "VerifyReport",
    "apply_six_cycles",
    "assemble",
    "build_aux_graph",
    "build_two_factor",
    "canonic_decompose",
    "enumerate_dyck",
    "enumerate_flippable_pairs",
    "is_dyck",
    "is_dyck_minus",
    "last_vertex",
    "match_M",
    "match_M_inv",
    "match_N",
    "match_N_inv",
    "path_to_star",
    "path_vertices",
    "rev_complement",
    "rotate",
    "sigma",
    "six_cycle",
    "spanning_tree",
    "star",
    "tau_sequences",
    "verify_cycle",
]
