"""Pyminshare secret sharing library.

Min-entropy secure sharing schemes with an exact rational entropy verifier.
"""

__version__ = "0.1.0"

from .access.access_structure import (
    MAX_PARTIES,
    AccessStructure,
    CumulativeMap,
    cumulative_map,
    from_minimal_qualified,
    is_monotone,
    mask_to_parties,
    maximal_forbidden_masks,
    maximal_forbidden_sets,
    parties_to_mask,
    threshold_structure,
)
from .entropy.distributions import (
    JointDist,
    ProbDist,
    independent_joint,
    marginalize,
)
from .entropy.order import Order, parse_orders
from .entropy.renyi import (
    MAX_EXACT_POWER,
    avg_cond_min_entropy,
    cond_entropy,
    cond_renyi_arimoto,
    cond_shannon_entropy,
    entropy_profile,
    guessing_probability,
    log2,
    marginal_entropy,
    renyi_entropy,
    shannon_entropy,
    worst_cond_min_entropy,
    worst_guessing_probability,
)
from .errors import (
    AccessStructureError,
    DistributionError,
    FieldError,
    FieldInversionError,
    NonMonotoneError,
    NotQualifiedError,
    ParameterError,
    PyminshareError,
    UnsupportedOrderError,
)
from .field.prime_field import (
    FieldElement,
    PrimeField,
    add,
    check_party_count,
    eval_share_poly,
    inv,
    lagrange_at_zero,
    mul,
    sub,
)
from .schemes.cumulative import (
    CumulativeParams,
    cumulative_combine,
    cumulative_extended_distribution,
    cumulative_joint_distribution,
    cumulative_share,
    cumulative_share_from_draws,
)
from .schemes.scheme import SchemeParams
from .schemes.shamir import (
    MAX_TABLE_ROWS,
    DistributionTable,
    ShamirParams,
    shamir_combine,
    shamir_distribution_table,
    shamir_guessing_probability,
    shamir_joint_distribution,
    shamir_marginal_masses,
    shamir_params_for_guessing_probability,
    shamir_sample,
    shamir_sample_stack,
    shamir_share,
    shamir_share_from_coefficients,
)
from .schemes.share_bundle import SCHEME_ALIASES, SCHEME_TAGS, ShareBundle, canonical_scheme
from .schemes.xor import (
    XorParams,
    xor_combine,
    xor_joint,
    xor_joint_distribution,
    xor_sample_secret,
    xor_sample_secret_stack,
    xor_share,
    xor_share_from_draws,
    xor_share_stack,
    xor_split,
)
from .utils.jax_helpers import (
    bernoulli_zero_stack,
    key_from_seed,
    uniform_below,
    uniform_below_stack,
)
from .utils.log_helpers import configure_logging
from .utils.rational_helpers import (
    format_rational,
    parse_rational,
    rational_from_json,
    rational_to_json,
)
from .verify.constructions import (
    check_cumulative_scheme,
    check_shamir_scheme,
    check_xor_scheme,
)
from .verify.reports import (
    BoundEntry,
    CheckReport,
    GapEntry,
    IdealityEntry,
    IdealityReport,
    SecurityReport,
    ShareBoundsReport,
)
from .verify.security import (
    check_share_bounds,
    epsilon_security,
    gap_maximized_at_maximal_sets,
    ideality,
    is_independent,
    is_non_perfect,
    share_names,
)
from .verify.suite import (
    CHECK_ALIASES,
    CHECK_NAMES,
    canonical_checks,
    parse_checks,
    security_summary,
    verify_scheme,
)


__all__ = [
    "MAX_PARTIES",
    "AccessStructure",
    "CumulativeMap",
    "cumulative_map",
    "from_minimal_qualified",
    "is_monotone",
    "mask_to_parties",
    "maximal_forbidden_masks",
    "maximal_forbidden_sets",
    "parties_to_mask",
    "threshold_structure",
    "JointDist",
    "ProbDist",
    "independent_joint",
    "marginalize",
    "Order",
    "parse_orders",
    "MAX_EXACT_POWER",
    "avg_cond_min_entropy",
    "cond_entropy",
    "cond_renyi_arimoto",
    "cond_shannon_entropy",
    "entropy_profile",
    "guessing_probability",
    "log2",
    "marginal_entropy",
    "renyi_entropy",
    "shannon_entropy",
    "worst_cond_min_entropy",
    "worst_guessing_probability",
    "AccessStructureError",
    "DistributionError",
    "FieldError",
    "FieldInversionError",
    "NonMonotoneError",
    "NotQualifiedError",
    "ParameterError",
    "PyminshareError",
    "UnsupportedOrderError",
    "FieldElement",
    "PrimeField",
    "add",
    "check_party_count",
    "eval_share_poly",
    "inv",
    "lagrange_at_zero",
    "mul",
    "sub",
    "CumulativeParams",
    "cumulative_combine",
    "cumulative_extended_distribution",
    "cumulative_joint_distribution",
    "cumulative_share",
    "cumulative_share_from_draws",
    "SchemeParams",
    "MAX_TABLE_ROWS",
    "DistributionTable",
    "ShamirParams",
    "shamir_combine",
    "shamir_distribution_table",
    "shamir_guessing_probability",
    "shamir_joint_distribution",
    "shamir_marginal_masses",
    "shamir_params_for_guessing_probability",
    "shamir_sample",
    "shamir_sample_stack",
    "shamir_share",
    "shamir_share_from_coefficients",
    "SCHEME_TAGS",
    "SCHEME_ALIASES",
    "canonical_scheme",
    "ShareBundle",
    "XorParams",
    "xor_combine",
    "xor_joint",
    "xor_joint_distribution",
    "xor_sample_secret",
    "xor_sample_secret_stack",
    "xor_share",
    "xor_share_from_draws",
    "xor_share_stack",
    "xor_split",
    "bernoulli_zero_stack",
    "key_from_seed",
    "uniform_below",
    "uniform_below_stack",
    "configure_logging",
    "format_rational",
    "parse_rational",
    "rational_from_json",
    "rational_to_json",
    "check_cumulative_scheme",
    "check_shamir_scheme",
    "check_xor_scheme",
    "BoundEntry",
    "CheckReport",
    "GapEntry",
    "IdealityEntry",
    "IdealityReport",
    "SecurityReport",
    "ShareBoundsReport",
    "check_share_bounds",
    "epsilon_security",
    "gap_maximized_at_maximal_sets",
    "ideality",
    "is_independent",
    "is_non_perfect",
    "share_names",
    "CHECK_NAMES",
    "CHECK_ALIASES",
    "canonical_checks",
    "parse_checks",
    "security_summary",
    "verify_scheme",
]
