"""Multiplicative-knapsack key transform and convergent-scanning attack lab."""

from .attack import (
    FULL_FILTER,
    LEGENDRE_ONLY,
    AttackFilter,
    AttackReport,
    CandidateHit,
    IndexClash,
    compute_z,
    compute_z_pair,
    construct_pseudo_relation,
    count_compatible,
    delta_of,
    factor_pairs,
    max_a,
    prime_product_P,
    run_attack,
    scan_triple,
    strict_filter,
)
from .contfrac import (
    ContinuedFraction,
    Convergent,
    ZeroDenominator,
    bound_holds,
    cf_expand,
    convergent_at,
    is_convergent,
    legendre_scan,
)
from .keys import (
    InvalidDelta,
    InvalidParams,
    OmegaFamily,
    OmegaReport,
    OmegaSet,
    PrivateKey,
    PublicKey,
    SumMode,
    SystemParams,
    Variant,
    build_omega,
    coprime_sequence,
    keygen,
    transform,
    validate_omega,
    verify_keypair,
)
from .numtheory import (
    ExtGcdResult,
    NotInvertible,
    dlog_bruteforce,
    ext_gcd,
    gcd,
    is_prime,
    mod_inv,
    mod_pow,
    mult_order,
    next_prime_above,
    nth_prime,
    pairwise_coprime,
    prime_index_leq,
)
from .reproduce import ReproductionResult, match_decimal, reproduce
from .studies import StudyResult, study_completeness, study_false_positive

__all__ = [
    "AttackFilter",
    "AttackReport",
    "CandidateHit",
    "ContinuedFraction",
    "Convergent",
    "ExtGcdResult",
    "FULL_FILTER",
    "IndexClash",
    "InvalidDelta",
    "InvalidParams",
    "LEGENDRE_ONLY",
    "NotInvertible",
    "OmegaFamily",
    "OmegaReport",
    "OmegaSet",
    "PrivateKey",
    "PublicKey",
    "ReproductionResult",
    "StudyResult",
    "SumMode",
    "SystemParams",
    "Variant",
    "ZeroDenominator",
    "bound_holds",
    "build_omega",
    "cf_expand",
    "compute_z",
    "compute_z_pair",
    "construct_pseudo_relation",
    "convergent_at",
    "coprime_sequence",
    "count_compatible",
    "delta_of",
    "dlog_bruteforce",
    "ext_gcd",
    "factor_pairs",
    "gcd",
    "is_convergent",
    "is_prime",
    "keygen",
    "legendre_scan",
    "match_decimal",
    "max_a",
    "mod_inv",
    "mod_pow",
    "mult_order",
    "next_prime_above",
    "nth_prime",
    "pairwise_coprime",
    "prime_index_leq",
    "prime_product_P",
    "reproduce",
    "run_attack",
    "scan_triple",
    "strict_filter",
    "study_completeness",
    "study_false_positive",
    "transform",
    "validate_omega",
    "verify_keypair",
]
