"""Exact tools for refined q,t-Catalan polynomials.

The package computes the two-statistic path polynomials two independent
ways: by enumerating paths with prescribed north-run lengths and scoring
them with the rank-tableau bounce algorithm, and by assembling rational
generating functions from half-open simplicial cones.  Everything is exact
(integer and rational arithmetic only), so each route can verify the other.
"""

from .catalog import (
    CaseSpec,
    LatticePiece,
    assemble_case,
    assemble_theorem,
    case_catalog,
    case_membership,
    printed_theorem,
    signed_multiplicity,
)
from .cones import (
    HalfOpenCone,
    RationalGF,
    gf_arith,
    gf_equals,
    gf_extract_parity,
    gf_substitute,
    integer_point_transform,
    is_unimodular,
    lattice_index,
    parallelepiped_points,
    parse_cone,
    series_expand,
)
from .errors import (
    DegenerateSubstitutionError,
    DomainError,
    InternalInvariantError,
    NonExpandableError,
    ParityError,
    UsageError,
)
from .paths import (
    BounceTrace,
    DyckPath,
    KVector,
    closed_stats_k4,
    closed_stats_kaaa,
    closed_stats_three,
    count_paths,
    enumerate_paths,
    path_stats,
)
from .polynomial import (
    QT_CONTEXT,
    LaurentPoly,
    VariableContext,
    coefficient_grid,
    is_qt_symmetric,
    poly_arith,
    poly_from_grid,
    qt_swap,
    substitute_monomials,
)
from .verify import (
    SymmetryReport,
    TheoremReport,
    carlitz_riordan,
    check_bounce_agreement,
    check_last_param,
    check_q_specializations,
    lambda_catalan,
    macmahon_q_catalan,
    q_binomial,
    refined_catalan,
    symmetry_report,
    symmetry_scan,
    verify_theorem,
)

__version__ = "0.1.0"
