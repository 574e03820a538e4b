"""Exact verification of the product-moment inequalities and their machinery.

The gamma-polynomials are assembled from the moment engine (binomial expansion
of the two-sided power against exact standard-normal moments), so the bridge
to the terminating hypergeometric form is a genuine two-sided cross-check and
not a tautology.  Every verdict is an exact rational comparison; strict-
positivity claims over an interval are checked on rational sample grids
together with an exact convexity witness, and the stationary-point agreement
of consecutive B-polynomials is certified through a sign change inside an
exactly isolated bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping, Sequence

from .core import Polynomial, Scalar, format_rational, isolate_root
from .moments import (
    CovarianceMatrix,
    InvalidCovarianceError,
    gaussian_moment,
    univariate_even_moment,
)
from .specialfn import OutOfRangeError, half_binomial, hyp2f1_terminating, pochhammer

Relation = Literal[">=", ">", "=="]


class UnequalVariancesError(ValueError):
    """The equal-variance precondition on the 2x2 covariance fails."""


class InvalidTripleError(ValueError):
    """Degenerate-triple constraints (a - b = 1, positive variances) violated."""


class NoSignChangeError(RuntimeError):
    """Derivative of a strictly convex polynomial failed to change sign in (0,1)."""


def _fmt(value) -> object:
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


@dataclass(frozen=True)
class InequalityVerdict:
    """Exact verdict on one inequality (or equality) instance.

    `relation` records what the claim asserts: lhs >= rhs, lhs > rhs, or
    lhs == rhs.  `holds` and `equality` are derived, never stored, so they can
    not drift out of sync with the rationals.
    """

    claim: str
    params: Mapping[str, object]
    lhs: Fraction
    rhs: Fraction
    relation: Relation = ">="
    equality_condition_met: bool | None = None

    @property
    def holds(self) -> bool:
        if self.relation == ">":
            return self.lhs > self.rhs
        if self.relation == "==":
            return self.lhs == self.rhs
        return self.lhs >= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": {k: _fmt(v) for k, v in self.params.items()},
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "equality_condition_met": self.equality_condition_met,
        }


@dataclass(frozen=True)
class GammaPolynomialSet:
    """G, H, B for one (m, n, r): the moment polynomial, its excess over the
    conjectured constant, and its hypergeometric normalization."""

    m: int
    n: int
    r: int
    G: Polynomial
    H: Polynomial
    B: Polynomial


@dataclass(frozen=True)
class DegenerateTriple:
    """Rank-deficient triple (X, Y, Z) = (U + aZ, U + bZ, Z), E[Z^2] = 1.

    The difference constraint a - b = 1 encodes Z = X - Y; sigma2 = E[U^2] may
    be zero (rank-1 boundary) as long as X and Y keep positive variance.
    """

    a: Fraction
    b: Fraction
    sigma2: Fraction

    def __post_init__(self):
        if self.a - self.b != 1:
            raise InvalidTripleError(f"need a - b = 1, got a={self.a}, b={self.b}")
        if self.sigma2 < 0:
            raise InvalidTripleError(f"need sigma2 >= 0, got {self.sigma2}")
        if self.sigma2 + self.a**2 == 0 or self.sigma2 + self.b**2 == 0:
            raise InvalidTripleError("X and Y must have positive variance")

    @classmethod
    def from_a(cls, a: Scalar, sigma2: Scalar) -> "DegenerateTriple":
        a = Fraction(a)
        return cls(a, a - 1, Fraction(sigma2))

    def covariance(self) -> CovarianceMatrix:
        a, b, s2 = self.a, self.b, self.sigma2
        return CovarianceMatrix.from_rows(
            [
                [s2 + a * a, s2 + a * b, a],
                [s2 + a * b, s2 + b * b, b],
                [a, b, Fraction(1)],
            ]
        )


@dataclass(frozen=True)
class RegressionSplit:
    """Z = Z0 + Z1 with Z0 = alpha X + beta Y and Z1 independent of (X, Y)."""

    alpha: Fraction
    beta: Fraction
    var_z1: Fraction
    singular_fallback: bool = False


@dataclass(frozen=True)
class StationaryPointCertificate:
    """Outcome of the consecutive-B stationary-point check.

    `bracket` isolates the unique root of B_{m+1}' in (0,1) to the requested
    width; `diff_lo`/`diff_hi` are B_{m+1} - B_m at the bracket endpoints, so
    diff_lo * diff_hi <= 0 certifies the two polynomials meet inside it.
    """

    m: int
    n: int
    r: int
    bracket: tuple[Fraction, Fraction]
    diff_lo: Fraction
    diff_hi: Fraction
    derivative_at_half: Fraction | None = None

    @property
    def stationary_values_agree(self) -> bool:
        return self.diff_lo * self.diff_hi <= 0

    @property
    def min_left_of_half(self) -> bool | None:
        if self.derivative_at_half is None:
            return None
        return self.derivative_at_half > 0

    def as_dict(self) -> dict:
        return {
            "claim": "lemma_stationary_match",
            "params": {"m": self.m, "n": self.n, "r": self.r},
            "bracket": [format_rational(x) for x in self.bracket],
            "diff_lo": format_rational(self.diff_lo),
            "diff_hi": format_rational(self.diff_hi),
            "holds": self.stationary_values_agree,
            "derivative_at_half": _fmt(self.derivative_at_half),
            "min_left_of_half": self.min_left_of_half,
        }


_STD_PAIR = CovarianceMatrix.diagonal([1, 1])


def _even_pair_moment(u_half: int, v_half: int) -> Fraction:
    """E[U^{2i} V^{2j}] for independent standard normals, via the moment engine."""
    return gaussian_moment(_STD_PAIR, (2 * u_half, 2 * v_half))


def build_gamma_polynomials(m: int, n: int, r: int) -> GammaPolynomialSet:
    """Expand E[U^{2m} V^{2n} (gamma (U^2+V^2) - V^2)^{2r}] into powers of gamma.

    G comes straight from the binomial theorem and exact standard-normal
    moments; H subtracts the constant 2^{m+n+2r} (1/2)_m (1/2)_{n+r} (1/2)_r;
    B rescales G by the positive constant 2^{m+n+2r} (1/2)_m (1/2)_{n+2r}.
    """
    if m < 0 or n < 0 or r < 1:
        raise OutOfRangeError(f"need m, n >= 0 and r >= 1, got m={m}, n={n}, r={r}")
    coeffs = []
    for i in range(2 * r + 1):
        inner = sum(
            (
                math.comb(i, j) * _even_pair_moment(m + j, n + 2 * r - j)
                for j in range(i + 1)
            ),
            Fraction(0),
        )
        coeffs.append((-1) ** i * math.comb(2 * r, i) * inner)
    g = Polynomial(coeffs)
    half = Fraction(1, 2)
    shift = (
        2 ** (m + n + 2 * r)
        * pochhammer(half, m)
        * pochhammer(half, n + r)
        * pochhammer(half, r)
    )
    scale = 2 ** (m + n + 2 * r) * pochhammer(half, m) * pochhammer(half, n + 2 * r)
    return GammaPolynomialSet(m, n, r, G=g, H=g - shift, B=(1 / scale) * g)


def hypergeometric_G(m: int, n: int, r: int, gamma: Scalar) -> Fraction:
    """The bridge formula: 2^{m+n+2r} (1/2)_m (1/2)_{n+2r} F(-2r, -m-n-2r, 1/2-n-2r; gamma)."""
    half = Fraction(1, 2)
    scale = 2 ** (m + n + 2 * r) * pochhammer(half, m) * pochhammer(half, n + 2 * r)
    return scale * hyp2f1_terminating(-2 * r, -m - n - 2 * r, half - n - 2 * r, gamma)


def default_bridge_gammas(r: int) -> list[Fraction]:
    """2r+1 distinct rationals in (0,1): enough to certify a degree-2r identity."""
    return [Fraction(t, 2 * r + 2) for t in range(1, 2 * r + 2)]


def cross_check_lemma29(
    m: int, n: int, r: int, gammas: Sequence[Scalar] | None = None
) -> bool:
    """Moment-built G against the hypergeometric formula at every sample gamma.

    Both sides are degree-2r polynomials, so agreement at 2r+1 distinct points
    (the default grid) certifies the polynomial identity.
    """
    polys = build_gamma_polynomials(m, n, r)
    if gammas is None:
        gammas = default_bridge_gammas(r)
    for gamma in gammas:
        gamma = Fraction(gamma)
        if not 0 < gamma < 1:
            raise OutOfRangeError(f"sample gamma must lie in (0,1), got {gamma}")
        if polys.G(gamma) != hypergeometric_G(m, n, r, gamma):
            return False
    return True


def interior_gammas(count: int) -> list[Fraction]:
    """count evenly spaced rationals strictly inside (0,1)."""
    return [Fraction(t, count + 1) for t in range(1, count + 1)]


def check_H_positivity(
    m: int, n: int, r: int, sample_count: int = 50
) -> list[InequalityVerdict]:
    """H's exact zero at 1/2 (m = n), strict positivity at sampled gammas, and
    the convexity witness H'' > 0 at the same samples."""
    if not (m >= n >= 0) or r < 1:
        raise OutOfRangeError(f"need m >= n >= 0 and r >= 1, got m={m}, n={n}, r={r}")
    h = build_gamma_polynomials(m, n, r).H
    h2 = h.derivative().derivative()
    half = Fraction(1, 2)
    verdicts = []
    if m == n:
        verdicts.append(
            InequalityVerdict(
                "H_nn_half_zero", {"m": m, "n": n, "r": r}, h(half), Fraction(0), "=="
            )
        )
    for gamma in interior_gammas(sample_count):
        if m == n and gamma == half:
            continue
        base = {"m": m, "n": n, "r": r, "gamma": gamma}
        verdicts.append(InequalityVerdict("H_positive", base, h(gamma), Fraction(0), ">"))
        verdicts.append(
            InequalityVerdict("H_convexity", base, h2(gamma), Fraction(0), ">")
        )
    return verdicts


def check_lemma210(
    m: int, n: int, r: int, width: Scalar = Fraction(1, 2**20)
) -> StationaryPointCertificate:
    """Certify that B_{m+1} and B_m agree at the minimum point of B_{m+1}.

    The derivative root gamma_{m+1} is isolated in (0,1) by exact bisection;
    B_{m+1} - B_m must change sign (or vanish) inside the bracket.  For m = n
    the derivative of B_{n+1} at 1/2 is also reported: its positive sign is
    the exact certificate that gamma_{n+1} < 1/2.
    """
    if not (m >= n >= 0) or r < 1:
        raise OutOfRangeError(f"need m >= n >= 0 and r >= 1, got m={m}, n={n}, r={r}")
    b_next = build_gamma_polynomials(m + 1, n, r).B
    b_curr = build_gamma_polynomials(m, n, r).B
    db = b_next.derivative()
    if not (db(0) < 0 < db(1)):
        raise NoSignChangeError(
            f"B' does not change sign on (0,1) for m={m}, n={n}, r={r}: "
            f"B'(0)={db(0)}, B'(1)={db(1)}"
        )
    lo, hi = isolate_root(db, 0, 1, width)
    diff = b_next - b_curr
    at_half = db(Fraction(1, 2)) if m == n else None
    return StationaryPointCertificate(
        m, n, r, (lo, hi), diff(lo), diff(hi), derivative_at_half=at_half
    )


def min_C(m: int, n: int, r: int) -> tuple[int, Fraction]:
    """Scan C(i) = hb(m+r-i, r-i) hb(n+i, i) over 0 <= i <= r for its minimum.

    Postcondition (C is unimodal with its peak strictly inside): the minimum
    is attained at i = 0 or i = r and equals hb(min(m,n)+r, r).
    """
    if m < 1 or n < 1 or r < 1:
        raise OutOfRangeError(f"need m, n, r >= 1, got m={m}, n={n}, r={r}")
    values = [half_binomial(m + r - i, r - i) * half_binomial(n + i, i) for i in range(r + 1)]
    value = min(values)
    argmin = values.index(value)
    if argmin not in (0, r) or value != half_binomial(min(m, n) + r, r):
        raise RuntimeError(
            f"endpoint-minimum postcondition failed at m={m}, n={n}, r={r}: "
            f"argmin={argmin}, value={value}"
        )
    return argmin, value


def _require_positive(name: str, value: Fraction) -> Fraction:
    if value <= 0:
        raise OutOfRangeError(f"{name} must be > 0, got {value}")
    return value


def check_prop21(m: int, n: int, r: int, a2: Scalar, b2: Scalar) -> InequalityVerdict:
    """E[X^{2m} Y^{2n} (X+Y)^{2r}] >= hb((m^n)+r, r) E[X^{2m}] E[Y^{2n}] E[(X+Y)^{2r}]
    for independent X, Y with variances a2, b2."""
    if m < 1 or n < 1 or r < 1:
        raise OutOfRangeError(f"need m, n, r >= 1, got m={m}, n={n}, r={r}")
    a2 = _require_positive("a2", Fraction(a2))
    b2 = _require_positive("b2", Fraction(b2))
    cov3 = CovarianceMatrix.from_rows(
        [[a2, 0, a2], [0, b2, b2], [a2, b2, a2 + b2]]
    )
    lhs = gaussian_moment(cov3, (2 * m, 2 * n, 2 * r))
    rhs = (
        half_binomial(min(m, n) + r, r)
        * univariate_even_moment(a2, m)
        * univariate_even_moment(b2, n)
        * univariate_even_moment(a2 + b2, r)
    )
    return InequalityVerdict(
        "prop21", {"m": m, "n": n, "r": r, "a2": a2, "b2": b2}, lhs, rhs
    )


def check_thm22(m: int, n: int, r: int, a2: Scalar, b2: Scalar) -> InequalityVerdict:
    """E[X^{2m} Y^{2n} (X^2-Y^2)^{2r}] >= hb((m^n)+r, r) E[X^{2m}] E[Y^{2n}] (E[(X+Y)^{2r}])^2.

    The left side is expanded binomially into independent even moments, not
    routed through the joint-moment recursion; equality holds exactly on
    {m = n and a2 = b2}, which the verdict records as the condition flag.
    """
    if m < 0 or n < 0 or r < 1:
        raise OutOfRangeError(f"need m, n >= 0 and r >= 1, got m={m}, n={n}, r={r}")
    a2 = _require_positive("a2", Fraction(a2))
    b2 = _require_positive("b2", Fraction(b2))
    lhs = sum(
        (
            (-1) ** i
            * math.comb(2 * r, i)
            * univariate_even_moment(a2, m + 2 * r - i)
            * univariate_even_moment(b2, n + i)
            for i in range(2 * r + 1)
        ),
        Fraction(0),
    )
    rhs = (
        half_binomial(min(m, n) + r, r)
        * univariate_even_moment(a2, m)
        * univariate_even_moment(b2, n)
        * univariate_even_moment(a2 + b2, r) ** 2
    )
    return InequalityVerdict(
        "thm22",
        {"m": m, "n": n, "r": r, "a2": a2, "b2": b2},
        lhs,
        rhs,
        equality_condition_met=(m == n and a2 == b2),
    )


def check_cor23(m: int, n: int, r: int, cov2: CovarianceMatrix) -> InequalityVerdict:
    """The rotated form on (Z, W) with equal variances:

        E[Z^{2r} W^{2r} (Z+W)^{2m} (Z-W)^{2n}]
            >= hb((m^n)+r, r) (E[Z^{2r}])^2 E[(Z+W)^{2m}] E[(Z-W)^{2n}]

    computed through the rank-2 4x4 covariance of (Z, W, Z+W, Z-W); equality
    holds exactly on {m = n and E[ZW] = 0}.
    """
    if m < 0 or n < 0 or r < 1:
        raise OutOfRangeError(f"need m, n >= 0 and r >= 1, got m={m}, n={n}, r={r}")
    if cov2.dim != 2:
        raise InvalidCovarianceError(f"need a 2x2 covariance, got {cov2.dim}x{cov2.dim}")
    s, c = cov2.entries[0][0], cov2.entries[0][1]
    if cov2.entries[1][1] != s:
        raise UnequalVariancesError(
            f"Z and W must share their variance, got {s} and {cov2.entries[1][1]}"
        )
    _require_positive("variance", s)
    cov4 = CovarianceMatrix.from_rows(
        [
            [s, c, s + c, s - c],
            [c, s, s + c, c - s],
            [s + c, s + c, 2 * (s + c), 0],
            [s - c, c - s, 0, 2 * (s - c)],
        ]
    )
    lhs = gaussian_moment(cov4, (2 * r, 2 * r, 2 * m, 2 * n))
    rhs = (
        half_binomial(min(m, n) + r, r)
        * univariate_even_moment(s, r) ** 2
        * univariate_even_moment(2 * (s + c), m)
        * univariate_even_moment(2 * (s - c), n)
    )
    return InequalityVerdict(
        "cor23",
        {"m": m, "n": n, "r": r, "variance": s, "cross": c},
        lhs,
        rhs,
        equality_condition_met=(m == n and c == 0),
    )


def check_lemma31(m: int, n: int, triple: DegenerateTriple) -> InequalityVerdict:
    """Strict inequality for the rank-deficient triple:

        E[X^{2m} Y^{2m} Z^{2n}] > E[X^{2m}] E[Y^{2m}] E[Z^{2n}]
    """
    if m < 1 or n < 1:
        raise OutOfRangeError(f"need m, n >= 1, got m={m}, n={n}")
    cov3 = triple.covariance()
    lhs = gaussian_moment(cov3, (2 * m, 2 * m, 2 * n))
    rhs = (
        univariate_even_moment(cov3.entries[0][0], m)
        * univariate_even_moment(cov3.entries[1][1], m)
        * univariate_even_moment(Fraction(1), n)
    )
    return InequalityVerdict(
        "lemma31",
        {"m": m, "n": n, "a": triple.a, "b": triple.b, "sigma2": triple.sigma2},
        lhs,
        rhs,
        relation=">",
    )


def regression_split(cov3: CovarianceMatrix) -> RegressionSplit:
    """Split Z into its linear regression Z0 = alpha X + beta Y and the
    orthogonal (hence independent) remainder Z1.

    A singular (X, Y) block falls back to the maximal invertible sub-block
    (or to alpha = beta = 0 when both variances vanish) and flags the output.
    """
    if cov3.dim != 3:
        raise InvalidCovarianceError(f"need a 3x3 covariance, got {cov3.dim}x{cov3.dim}")
    s = cov3.entries
    sxx, sxy, syy = s[0][0], s[0][1], s[1][1]
    sxz, syz, szz = s[0][2], s[1][2], s[2][2]
    det = sxx * syy - sxy * sxy
    if det != 0:
        alpha = (syy * sxz - sxy * syz) / det
        beta = (sxx * syz - sxy * sxz) / det
        fallback = False
    elif sxx != 0:
        alpha, beta, fallback = sxz / sxx, Fraction(0), True
    elif syy != 0:
        alpha, beta, fallback = Fraction(0), syz / syy, True
    else:
        alpha, beta, fallback = Fraction(0), Fraction(0), True
    var_z1 = szz - (alpha * sxz + beta * syz)
    # PSD of the input makes these identities automatic; a violation would mean
    # the covariance certificate itself is broken.
    if sxz - (alpha * sxx + beta * sxy) != 0 or syz - (alpha * sxy + beta * syy) != 0:
        raise RuntimeError("regression residual is not orthogonal to (X, Y)")
    if var_z1 < 0:
        raise RuntimeError("negative residual variance from a certified PSD covariance")
    return RegressionSplit(alpha, beta, var_z1, singular_fallback=fallback)


def check_thm32(m: int, n: int, cov3: CovarianceMatrix) -> InequalityVerdict:
    """E[X^{2m} Y^{2m} Z^{2n}] >= E[X^{2m}] E[Y^{2m}] E[Z^{2n}] for any centered
    Gaussian triple with positive variances."""
    if m < 1 or n < 1:
        raise OutOfRangeError(f"need m, n >= 1, got m={m}, n={n}")
    if cov3.dim != 3:
        raise InvalidCovarianceError(f"need a 3x3 covariance, got {cov3.dim}x{cov3.dim}")
    if any(cov3.entries[i][i] == 0 for i in range(3)):
        raise InvalidCovarianceError("every coordinate must have positive variance")
    lhs = gaussian_moment(cov3, (2 * m, 2 * m, 2 * n))
    rhs = (
        univariate_even_moment(cov3.entries[0][0], m)
        * univariate_even_moment(cov3.entries[1][1], m)
        * univariate_even_moment(cov3.entries[2][2], n)
    )
    return InequalityVerdict("thm32", {"m": m, "n": n}, lhs, rhs)


def check_main(m: int, cov3: CovarianceMatrix) -> InequalityVerdict:
    """The three-dimensional product inequality at equal exponents, with the
    equality condition (all off-diagonal covariances vanish) recorded."""
    base = check_thm32(m, m, cov3)
    return InequalityVerdict(
        "main",
        {"m": m},
        base.lhs,
        base.rhs,
        equality_condition_met=cov3.is_diagonal(),
    )


WEI_COUNTEREXAMPLE_COV = CovarianceMatrix.from_rows(
    [[1, 1, 1], [1, 5, -3], [1, -3, 5]]
)


def counterexample_wei() -> tuple[Fraction, Fraction]:
    """The split-product failure for (U, U+2V, U-2V) with U, V independent
    standard normals: returns (E[U^2 (U+2V)^2 (U-2V)^2], E[U^2] E[(U+2V)^2 (U-2V)^2]),
    which is exactly (39, 43)."""
    lhs = gaussian_moment(WEI_COUNTEREXAMPLE_COV, (2, 2, 2))
    tail = CovarianceMatrix.from_rows([[5, -3], [-3, 5]])
    rhs = univariate_even_moment(Fraction(1), 1) * gaussian_moment(tail, (2, 2))
    return lhs, rhs
