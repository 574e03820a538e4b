"""Exact-arithmetic moments of centered Gaussian vectors and a verification
harness for the three-dimensional Gaussian product inequality."""

from .core import (
    Polynomial,
    Rational,
    SameSignError,
    SplitMix64,
    format_rational,
    isolate_root,
    parse_rational,
    poly_derivative,
    poly_eval,
)
from .identities import (
    IdentityVerdict,
    build_polynomial_L,
    check_corollary28,
    check_kummer_classical,
    check_lemma25,
    check_lemma27,
    check_symmetric_identity,
)
from .moments import (
    CovarianceMatrix,
    DimensionMismatchError,
    InvalidCovarianceError,
    NotSymmetricError,
    PsdCertificate,
    exponents_from_json,
    exponents_to_json,
    gaussian_moment,
    is_psd,
    random_covariance,
    univariate_even_moment,
)
from .specialfn import (
    CONTIGUOUS_RELATIONS,
    HypergeometricParams,
    NonTerminatingError,
    OutOfRangeError,
    PoleBeforeTerminationError,
    contiguous_check,
    double_factorial_odd,
    half_binomial,
    hyp2f1_poly,
    hyp2f1_terminating,
    pfaff_check,
    pfaff_instance,
    pochhammer,
)
from .verifier import (
    DegenerateTriple,
    GammaPolynomialSet,
    InequalityVerdict,
    InvalidTripleError,
    NoSignChangeError,
    RegressionSplit,
    StationaryPointCertificate,
    UnequalVariancesError,
    build_gamma_polynomials,
    check_H_positivity,
    check_cor23,
    check_lemma210,
    check_lemma31,
    check_main,
    check_prop21,
    check_thm22,
    check_thm32,
    counterexample_wei,
    cross_check_lemma29,
    default_bridge_gammas,
    hypergeometric_G,
    interior_gammas,
    min_C,
    regression_split,
)

__version__ = "0.1.0"
