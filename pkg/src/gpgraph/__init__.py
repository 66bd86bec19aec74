"""Generalized Petersen graphs: cores, retractions, symmetry, and Cayley
representations of semigroups and monoids."""

from .algebra import AlgebraError, OpTable, analyze, builtin_tables, cay1_monoid
from .cayley import (
    CayleyDigraph,
    build_cayley,
    build_named_construction,
    is_2gen_monoid_graph,
    is_group_graph,
    is_isomorphic,
    underlying_graph,
    verify_representation,
)
from .core_classifier import (
    CoreReason,
    CoreStatus,
    CoreVerdict,
    build_retraction,
    classify_core,
    is_endomorphism_transitive,
    retraction_target,
)
from .gp_core import (
    BipartiteGraphError,
    GPParams,
    GraphError,
    SimpleGraph,
    build_gp,
    is_bipartite_gp,
    kronecker_cover,
    min_odd_cycle_witnesses,
    odd_girth,
)
from .hom_engine import (
    BudgetExhaustedError,
    SearchBudget,
    VertexMap,
    find_homomorphism,
    is_core_oracle,
    verify_retraction,
)
from .symmetry import (
    aut_group_bruteforce,
    expected_aut_order,
    inside_out_is_automorphism,
    is_vertex_transitive,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BipartiteGraphError",
    "BudgetExhaustedError",
    "CayleyDigraph",
    "CoreReason",
    "CoreStatus",
    "CoreVerdict",
    "GPParams",
    "GraphError",
    "OpTable",
    "SearchBudget",
    "SimpleGraph",
    "VertexMap",
    "analyze",
    "aut_group_bruteforce",
    "build_cayley",
    "build_gp",
    "build_named_construction",
    "build_retraction",
    "builtin_tables",
    "cay1_monoid",
    "classify_core",
    "expected_aut_order",
    "find_homomorphism",
    "inside_out_is_automorphism",
    "is_2gen_monoid_graph",
    "is_bipartite_gp",
    "is_core_oracle",
    "is_endomorphism_transitive",
    "is_group_graph",
    "is_isomorphic",
    "is_vertex_transitive",
    "kronecker_cover",
    "min_odd_cycle_witnesses",
    "odd_girth",
    "retraction_target",
    "underlying_graph",
    "verify_representation",
    "verify_retraction",
]
