"""Exact joint statistics on Schroder-enumerated permutation classes.

Six pattern-pair avoidance classes in S_n carry the joint distribution of
(first letter, descents); the same polynomials arise as (last letter, dist)
on a family of restricted inversion sequences.  This package computes those
distributions three independent ways -- brute-force enumeration, recurrence
tables, and truncated expansion of closed-form generating functions -- with
exact rational arithmetic throughout, and cross-checks the pipelines
against each other.
"""

from .mpoly import (
    MPoly,
    NotDivisibleError,
    divexact,
    first_difference,
    poly_sum,
)
from .series import (
    XSeries,
    BadConstantTermError,
    NonInvertibleConstantTermError,
    geometric,
    integrality_check,
    series_div,
    series_mul,
    series_sqrt,
)
from .gfexpr import ParseError, UnknownVariableError, parse, render, variables_used
from .gfeval import EvalError, NonPolynomialCoefficientError, eval_series
from .assets import (
    DEFAULT_ORDER,
    FormulaAsset,
    OutOfScopeAssetError,
    UnknownAssetError,
    asset_names,
    coeff_distribution,
    get_asset,
    get_expr,
    get_series,
)
from .perms import (
    ALL_LENGTH4_PATTERNS,
    EQUIDISTRIBUTED_PAIRS,
    InputNotInClassError,
    act_dact,
    act_dact_distribution,
    asc_last_distribution,
    avoids_all,
    contains_pattern,
    count_avoiders,
    decreasing_top_distribution,
    enumerate_avoiders,
    first_desc_distribution,
    first_two_distribution,
    indecomposable_top_distribution,
    pair_from_string,
    pair_id,
    pattern_from_string,
    perm_stats,
    reverse_pattern,
)
from .invseq import (
    UTable,
    enumerate_members,
    is_inversion_sequence,
    last_dist_distribution,
    seq_stats,
    u_oracle,
)
from .tables import (
    A_CASES,
    ATable,
    DETables,
    RTable,
    SchroederTriangle,
    UnknownCaseError,
    a_distribution,
    assemble_A,
    assemble_D123,
    assemble_E,
    assemble_R_pieces,
    assemble_U,
    build_a_table,
    build_de_tables,
    build_r_table,
    build_u_table,
    d_distribution,
    r_distribution,
    schroeder_triangle,
)

__version__ = "0.1.0"

__all__ = [
    "MPoly",
    "NotDivisibleError",
    "divexact",
    "first_difference",
    "poly_sum",
    "XSeries",
    "BadConstantTermError",
    "NonInvertibleConstantTermError",
    "geometric",
    "integrality_check",
    "series_div",
    "series_mul",
    "series_sqrt",
    "ParseError",
    "UnknownVariableError",
    "parse",
    "render",
    "variables_used",
    "EvalError",
    "NonPolynomialCoefficientError",
    "eval_series",
    "DEFAULT_ORDER",
    "FormulaAsset",
    "OutOfScopeAssetError",
    "UnknownAssetError",
    "asset_names",
    "coeff_distribution",
    "get_asset",
    "get_expr",
    "get_series",
    "ALL_LENGTH4_PATTERNS",
    "EQUIDISTRIBUTED_PAIRS",
    "InputNotInClassError",
    "act_dact",
    "act_dact_distribution",
    "asc_last_distribution",
    "avoids_all",
    "contains_pattern",
    "count_avoiders",
    "decreasing_top_distribution",
    "enumerate_avoiders",
    "first_desc_distribution",
    "first_two_distribution",
    "indecomposable_top_distribution",
    "pair_from_string",
    "pair_id",
    "pattern_from_string",
    "perm_stats",
    "reverse_pattern",
    "UTable",
    "enumerate_members",
    "is_inversion_sequence",
    "last_dist_distribution",
    "seq_stats",
    "u_oracle",
    "A_CASES",
    "ATable",
    "DETables",
    "RTable",
    "SchroederTriangle",
    "UnknownCaseError",
    "a_distribution",
    "assemble_A",
    "assemble_D123",
    "assemble_E",
    "assemble_R_pieces",
    "assemble_U",
    "build_a_table",
    "build_de_tables",
    "build_r_table",
    "build_u_table",
    "d_distribution",
    "r_distribution",
    "schroeder_triangle",
    "__version__",
]
