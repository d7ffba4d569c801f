"""Rainbow domination on cubic graphs and generalized Petersen graphs.

Thin wrapper around the compiled extension; see the individual functions'
docstrings. Vertex id convention for P(n,k): outer u_i = i, inner v_i = n + i.
"""

from ._core import (  # noqa: F401
    AuditCheck,
    AuditReport,
    BoundReport,
    BudgetExhaustedError,
    Census,
    Certificate,
    ContractError,
    Graph,
    OuterPatternFinding,
    ParseError,
    PetersenParams,
    RainbowAssignment,
    SolveResult,
    SolveStats,
    StateSpaceTooLargeError,
    TriPartition,
    VerifyReport,
    Violation,
    audit_extremal_4,
    audit_extremal_5,
    audit_outer_pattern,
    audit_weight_census_bounds,
    bipartition,
    bounds_pckk,
    build_example_graph,
    build_generalized_petersen,
    build_subdivided_k4,
    canonicalize_colors,
    census,
    certify,
    characterization_r1,
    characterization_r2,
    default_tripartition,
    example_4rdf,
    export_dot,
    extremal_pattern,
    generic_lower_bound,
    is_characterized_extremal,
    is_cubic,
    is_singleton,
    known_exact_pn1,
    lift,
    parse_assignment,
    parse_graph,
    profile_dp_state_estimate,
    serialize_assignment,
    serialize_graph,
    solve_auto,
    solve_branch_bound,
    solve_profile_dp,
    verify_trdf,
    weight,
)

__version__ = "0.1.0"
