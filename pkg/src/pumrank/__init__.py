"""Memory-1 convolutional codes from Gabidulin block codes, with exact
sum-rank-metric distance analysis."""

from .field import (
    ExtField,
    default_modulus,
    expand,
    find_normal_element,
    is_irreducible,
    is_prime,
    make_field,
)
from .matrices import (
    hamming_weight,
    rank_norm,
    sum_rank_distance,
    sum_rank_weight,
)
from .errors import BudgetExceeded, RecordError
from .gabidulin import (
    GabidulinCode,
    MrdReport,
    encode_block,
    make_gabidulin,
    min_rank_distance,
    min_rank_distance_bruteforce,
    verify_mrd,
    verify_mrd_generator,
)
from .pum import (
    ChainReport,
    MinimalBasicReport,
    PumCode,
    PumParams,
    RateCheck,
    build_code,
    check_minimal_basic,
    defining_exponents,
    encode_sequence,
    generator_checks,
    min_field_size,
    minimal_basic_report,
    rate_check,
    solve_generator,
    syndrome_sequence,
    verify_chain_blocks,
    verify_gabidulin_chain,
)
from .distances import (
    BoundsCheck,
    ConstructionBoundCheck,
    ConvEncoder,
    DistanceBounds,
    DistanceProfile,
    MetricComparison,
    TrellisClass,
    brute_force_row_distance,
    compare_hamming,
    construction_lower_bound,
    free_rank_distance,
    full_state_row_distances,
    row_distance_profile,
    slope_estimate,
    state_classes,
    upper_bounds,
)
from .records import (
    blockseq_from_record,
    blockseq_to_record,
    code_from_record,
    code_to_record,
    load_record,
    profile_to_csv,
    profile_to_record,
    save_record,
)

__all__ = [
    "BoundsCheck",
    "BudgetExceeded",
    "ChainReport",
    "ConstructionBoundCheck",
    "ConvEncoder",
    "DistanceBounds",
    "DistanceProfile",
    "ExtField",
    "GabidulinCode",
    "MetricComparison",
    "MinimalBasicReport",
    "MrdReport",
    "PumCode",
    "PumParams",
    "RateCheck",
    "RecordError",
    "TrellisClass",
    "blockseq_from_record",
    "blockseq_to_record",
    "brute_force_row_distance",
    "build_code",
    "check_minimal_basic",
    "code_from_record",
    "code_to_record",
    "compare_hamming",
    "construction_lower_bound",
    "default_modulus",
    "defining_exponents",
    "encode_block",
    "encode_sequence",
    "expand",
    "find_normal_element",
    "free_rank_distance",
    "full_state_row_distances",
    "generator_checks",
    "hamming_weight",
    "is_irreducible",
    "is_prime",
    "load_record",
    "make_field",
    "make_gabidulin",
    "min_field_size",
    "min_rank_distance",
    "min_rank_distance_bruteforce",
    "minimal_basic_report",
    "profile_to_csv",
    "profile_to_record",
    "rank_norm",
    "rate_check",
    "row_distance_profile",
    "save_record",
    "slope_estimate",
    "solve_generator",
    "state_classes",
    "sum_rank_distance",
    "sum_rank_weight",
    "syndrome_sequence",
    "upper_bounds",
    "verify_chain_blocks",
    "verify_gabidulin_chain",
    "verify_mrd",
    "verify_mrd_generator",
]
