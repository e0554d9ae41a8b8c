"""Fractional (g,f)-factors and all fractional (g,f)-factors including a subgraph.

Exact checkers for the Tutte-type deficiency conditions, a constructive
half-integral solver, a definition-level brute-force oracle and a seeded
cross-check search.
"""

__version__ = "0.1.0"

from .allfactors import all_factors_brute, enumerate_r, verify_equivalence
from .conditions import (
    CheckReport,
    GuardError,
    Witness,
    canonical_T,
    check_all_including,
    check_exists,
    check_sufficient,
    deficiency_all,
    deficiency_frac,
)
from .graph import (
    EdgeSubgraph,
    FactorError,
    Graph,
    ParseError,
    VertexFunc,
    VertexSet,
    deg_after_removal,
    edges_between,
    func_sum,
    parse_graph,
    parse_subgraph,
    parse_vertex_func,
    remove_edges,
)
from .kernels import BACKEND
from .oracle import SearchConfig, random_graph, random_instance, search_counterexample
from .solver import (
    FractionalFactor,
    SolveOutcome,
    complement_func,
    solve_fractional_factor,
    solve_including,
)
