"""Constructive antimagic-style graph labelings with exact certificates.

The package labels the edges of an arbitrary graph so that (weighted) vertex
sums are pairwise distinct wherever distinctness is achievable at all, in
two flavors: weighted list labelings with per-edge lists of size
m + floor(4n/3), and orientations with labels in {1..m + floor(2n/3)} whose
in-minus-out sums separate all non-isolated vertices. Each search the
construction performs is licensed by an exact nonzero-coefficient
certificate, and every result is re-verified independently.
"""

from .errors import (
    AntimagicError,
    BudgetExceededError,
    CertificateError,
    ContractError,
    GraphParseError,
    InfeasibleInstanceError,
    SchemaError,
    ValidationError,
)
from .graph import (
    ComponentDecomposition,
    Graph,
    Matching,
    decompose,
    edge_between,
    find_3plus_vertex,
    format_graph,
    matched_decomposition,
    max_matching_deg2,
    parse_graph,
    path_cycle_plans,
)
from .labeling import (
    Labeling,
    ListAssignment,
    Orientation,
    VerifyReport,
    Violation,
    Weighting,
    oriented_vertex_sums,
    verify_quasi_antimagic,
    vertex_sums,
)
from .cnsearch import (
    Constraint,
    ConstraintSystem,
    SearchOutcome,
    pick_candidate_sets,
    solve_constraints,
)
from .poly import (
    CoefficientCertificate,
    Polynomial,
    certify_reduction_monomial,
    reduction_polynomial,
    reduction_target_exponents,
    vandermonde_coefficient_formula,
    vandermonde_power,
    vandermonde_target_exponents,
)
from .pipeline import (
    VARIANT_ORIENTED,
    VARIANT_UNDIRECTED,
    SolveRequest,
    SolveResult,
    base_case_oriented,
    base_case_undirected,
    default_extra_labels,
    extend_reduction,
    solve,
)
from .oracle import OracleQuery, OracleResult, brute_force, sweep_min_k

__version__ = "0.1.0"

__all__ = [
    "AntimagicError",
    "BudgetExceededError",
    "CertificateError",
    "CoefficientCertificate",
    "ComponentDecomposition",
    "Constraint",
    "ConstraintSystem",
    "ContractError",
    "Graph",
    "GraphParseError",
    "InfeasibleInstanceError",
    "Labeling",
    "ListAssignment",
    "Matching",
    "OracleQuery",
    "OracleResult",
    "Orientation",
    "Polynomial",
    "SchemaError",
    "SearchOutcome",
    "SolveRequest",
    "SolveResult",
    "VARIANT_ORIENTED",
    "VARIANT_UNDIRECTED",
    "ValidationError",
    "VerifyReport",
    "Violation",
    "Weighting",
    "base_case_oriented",
    "base_case_undirected",
    "brute_force",
    "certify_reduction_monomial",
    "decompose",
    "default_extra_labels",
    "edge_between",
    "extend_reduction",
    "find_3plus_vertex",
    "format_graph",
    "matched_decomposition",
    "max_matching_deg2",
    "oriented_vertex_sums",
    "parse_graph",
    "path_cycle_plans",
    "pick_candidate_sets",
    "reduction_polynomial",
    "reduction_target_exponents",
    "solve",
    "solve_constraints",
    "sweep_min_k",
    "vandermonde_coefficient_formula",
    "vandermonde_power",
    "vandermonde_target_exponents",
    "verify_quasi_antimagic",
    "vertex_sums",
]
