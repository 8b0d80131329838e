"""Monomial evaluation codes whose Schur square has a designed distance."""

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptySet,
    InvalidOrder,
    InversionOfZero,
    MismatchedAmbient,
    MismatchedFields,
    NotReduced,
    ParityError,
    RangeError,
    SquareCodesError,
    SupportOutsideA,
)
from .gf import FieldSpec, enumerate_points, field
from .expsets import (
    ExpVec,
    MonomialSet,
    dilate,
    is_lower_set,
    minkowski_sum,
    reduce_exponent,
    reduce_set,
    square_support,
)
from .evalcode import (
    GeneratorMatrix,
    dual_matrix,
    exact_min_distance,
    generator_matrix,
    macwilliams_transform,
    min_distance_exhaustive,
    rank,
    row_space_equal,
    schur_square_matrix,
    weight_distribution_exhaustive,
)
from .families import (
    ConvexRegion,
    RationalHalfspace,
    algorithm1_verify,
    algorithm1_violation,
    all_weighted_rm_sets,
    check_square_designed,
    half_hyperbolic_set,
    hyperbolic_set,
    necessary_condition_check,
    reed_muller_set,
    region_from_json,
    region_lattice_points,
    region_to_json,
    square_design_violation,
    weighted_rm_set,
    wrm_even_optimal_set,
    wrm_even_witness,
)
from .bounds import (
    ParamsReport,
    best_wrm_square_design,
    footprint_argmins,
    footprint_bound,
    halfhyp_dimension_formula,
    params_csv_row,
    params_report,
    rm_min_distance,
    rm_vs_hyp_comparison,
    wrm_beats_halfhyp,
)
from .certify import (
    CertifiedDistance,
    DistanceCertificate,
    box_certificate,
    certified_min_distance,
    divisor_certificate,
    root_count_binomial,
    shift_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CertifiedDistance",
    "ConvexRegion",
    "DimensionMismatch",
    "DistanceCertificate",
    "EmptySet",
    "ExpVec",
    "FieldSpec",
    "GeneratorMatrix",
    "InvalidOrder",
    "InversionOfZero",
    "MismatchedAmbient",
    "MismatchedFields",
    "MonomialSet",
    "NotReduced",
    "ParamsReport",
    "ParityError",
    "RangeError",
    "RationalHalfspace",
    "SquareCodesError",
    "SupportOutsideA",
    "algorithm1_verify",
    "algorithm1_violation",
    "all_weighted_rm_sets",
    "best_wrm_square_design",
    "box_certificate",
    "certified_min_distance",
    "check_square_designed",
    "dilate",
    "divisor_certificate",
    "dual_matrix",
    "enumerate_points",
    "exact_min_distance",
    "field",
    "footprint_argmins",
    "footprint_bound",
    "generator_matrix",
    "half_hyperbolic_set",
    "halfhyp_dimension_formula",
    "hyperbolic_set",
    "is_lower_set",
    "macwilliams_transform",
    "min_distance_exhaustive",
    "minkowski_sum",
    "necessary_condition_check",
    "params_csv_row",
    "params_report",
    "rank",
    "reduce_exponent",
    "reduce_set",
    "reed_muller_set",
    "region_from_json",
    "region_lattice_points",
    "region_to_json",
    "rm_min_distance",
    "rm_vs_hyp_comparison",
    "root_count_binomial",
    "row_space_equal",
    "schur_square_matrix",
    "shift_reduce",
    "square_design_violation",
    "square_support",
    "weight_distribution_exhaustive",
    "weighted_rm_set",
    "wrm_beats_halfhyp",
    "wrm_even_optimal_set",
    "wrm_even_witness",
]
