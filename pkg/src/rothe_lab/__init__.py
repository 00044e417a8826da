"""Exact verification of classical binomial convolution identities
(Chu-Vandermonde, Rothe, Gould) and their q-analogues, built on a model of
graded binary words with constructive bijections."""

from .bijections import (
    BranchA,
    BranchB,
    Decomposition,
    PrefixMatch,
    compose,
    decompose,
    equal_weight_prefixes,
    factorize_at_least,
    theorem1_forward,
    theorem1_inverse,
)
from .errors import (
    CapExceededError,
    InvariantViolationError,
    NoMatchError,
    NotInDomainError,
    ParameterError,
    RotheLabError,
    UnsupportedArgumentError,
)
from .identities import (
    VerificationReport,
    check_gould,
    check_kmpink,
    check_kmx,
    check_pqkm,
    check_rothe1,
    check_rothe2,
    gen_binomial,
    grid_prove,
    rothe_coeff,
)
from .qseries import (
    LaurentPolynomial,
    check_invw,
    check_qchu,
    check_qchu_m1,
    gaussian_binomial,
    inv_generating_function,
    lp_add,
    lp_mul,
    lp_shift,
    qweighted_bijection_check,
)
from .words import (
    MAX_WORD_LENGTH,
    Grading,
    Word,
    b_count,
    enumerate_gamma,
    enumerate_gamma_prefix,
    has_prefix_of_weight,
    inversions,
    prefix_weights,
    reverse,
    weight,
    word_json,
)

__version__ = "0.1.0"

__all__ = [
    "BranchA",
    "BranchB",
    "CapExceededError",
    "Decomposition",
    "Grading",
    "InvariantViolationError",
    "LaurentPolynomial",
    "MAX_WORD_LENGTH",
    "NoMatchError",
    "NotInDomainError",
    "ParameterError",
    "PrefixMatch",
    "RotheLabError",
    "UnsupportedArgumentError",
    "VerificationReport",
    "Word",
    "b_count",
    "check_gould",
    "check_invw",
    "check_kmpink",
    "check_kmx",
    "check_pqkm",
    "check_qchu",
    "check_qchu_m1",
    "check_rothe1",
    "check_rothe2",
    "compose",
    "decompose",
    "enumerate_gamma",
    "enumerate_gamma_prefix",
    "equal_weight_prefixes",
    "factorize_at_least",
    "gaussian_binomial",
    "gen_binomial",
    "grid_prove",
    "has_prefix_of_weight",
    "inv_generating_function",
    "inversions",
    "lp_add",
    "lp_mul",
    "lp_shift",
    "prefix_weights",
    "qweighted_bijection_check",
    "reverse",
    "rothe_coeff",
    "theorem1_forward",
    "theorem1_inverse",
    "weight",
    "word_json",
]
