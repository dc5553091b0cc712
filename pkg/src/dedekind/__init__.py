"""Exact Dedekind sums, multiplier-permutation inversion counts and the
criteria for 12s(a1,b) - 12s(a2,b) to lie in Z, 2Z or 4Z."""

from .criteria import (
    CorollaryVerdict,
    DeltaClassReport,
    congruence_eq2_check,
    corollary_classify,
    criterion_mod_2z,
    criterion_mod_4z,
    criterion_mod_z,
    delta_classify,
    inversion_criterion,
)
from .exact import (
    EvenModulus,
    ExactRational,
    InternalInvariantViolation,
    InvalidInversionCount,
    InvalidModulus,
    NonIntegralResult,
    NotCoprime,
    ZeroDenominator,
    format_rational,
    gcd,
    jacobi_symbol,
    mod_inverse,
    rational_make,
)
from .explorer import EqualSumGroup, emit_csv, pairs_search
from .permutation import (
    InversionCount,
    MultiplierPermutation,
    inversion_count_direct,
    inversion_count_salie,
    permutation_image,
    salie_identity_check,
    zolotarev_check,
)
from .sums import (
    DedekindSumValue,
    dedekind_sum,
    dedekind_sum_fast,
    dedekind_sum_meyer,
    dedekind_sum_naive,
    inversions_from_sum,
    sawtooth,
    sum_from_inversions,
)
from .sweep import SweepConfig, verify_sweep

__version__ = "0.1.0"
