"""Exact-arithmetic Kahler-Ricci flow and divisor invariants on flag varieties."""

__version__ = "0.1.0"

from .dimcount import gt_count, lattice_count, weyl_dim
from .errors import BudgetExceeded, DomainError
from .flow import (
    RM_BOUND_SYMBOLIC,
    BoundsReport,
    FlowSolution,
    KahlerClass,
    ScaledVolume,
    bounds_report,
    class_at,
    diameter_bound,
    flow_of_divisor,
    lambda1_bounds,
    make_flow,
    p_values,
    ricci_lower_constant,
    ricci_norm_sq,
    scalar_curvature,
    volume,
)
from .invariants import (
    BorelBounds,
    InvariantReport,
    LctReport,
    degree,
    divisor_at,
    invariants_of,
    lct_lower,
    nef_value,
    script_C,
    script_T,
)
from .oracle import (
    CheckOutcome,
    SuiteConfig,
    SuiteReport,
    brute_nef,
    check_nef_consistency,
    check_ricci_identity,
    check_scalar_volume_identity,
    check_scale_laws,
    check_trajectory_bounds,
    check_weyl_gt_grid,
    run_suite,
)
from .parabolic import (
    DivisorClass,
    ParabolicFlag,
    build_flag,
    canonical_divisor,
    char_of_divisor,
    is_ample,
    is_integral,
    require_ample,
)
from .rootsys import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    cartan_matrix,
    fund_coords,
    height,
    pairing,
    positive_roots_from_cartan,
    rho,
    rho_pairing,
    symmetrizers,
    validate_type,
)

__all__ = [
    "RM_BOUND_SYMBOLIC",
    "BorelBounds",
    "BoundsReport",
    "BudgetExceeded",
    "CheckOutcome",
    "DivisorClass",
    "DomainError",
    "FlowSolution",
    "InvariantReport",
    "KahlerClass",
    "LctReport",
    "ParabolicFlag",
    "Root",
    "RootSystem",
    "ScaledVolume",
    "SuiteConfig",
    "SuiteReport",
    "Weight",
    "bounds_report",
    "brute_nef",
    "build_flag",
    "build_root_system",
    "canonical_divisor",
    "cartan_matrix",
    "char_of_divisor",
    "check_nef_consistency",
    "check_ricci_identity",
    "check_scalar_volume_identity",
    "check_scale_laws",
    "check_trajectory_bounds",
    "check_weyl_gt_grid",
    "class_at",
    "degree",
    "diameter_bound",
    "divisor_at",
    "flow_of_divisor",
    "fund_coords",
    "gt_count",
    "height",
    "invariants_of",
    "is_ample",
    "is_integral",
    "lambda1_bounds",
    "lattice_count",
    "lct_lower",
    "make_flow",
    "nef_value",
    "p_values",
    "pairing",
    "positive_roots_from_cartan",
    "require_ample",
    "rho",
    "rho_pairing",
    "ricci_lower_constant",
    "ricci_norm_sq",
    "run_suite",
    "scalar_curvature",
    "script_C",
    "script_T",
    "symmetrizers",
    "validate_type",
    "volume",
    "weyl_dim",
]
