"""Rising factorials, double factorials, half-binomials, and terminating 2F1.

Everything here is a finite exact computation: the only hypergeometric series
accepted are those whose first upper parameter is a nonpositive integer, so
F(a,b,c;z) is a polynomial in z and the classical transformation laws (Pfaff,
Gauss contiguous relations, the differentiation formula) can be checked as
identities between rationals or between coefficient lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .core import Polynomial, Scalar, format_rational

ContiguousRelation = Literal["R38", "R32", "R40", "DIFF"]

CONTIGUOUS_RELATIONS = ("R38", "R32", "R40", "DIFF")


class NonTerminatingError(ValueError):
    """Series does not terminate: the first upper parameter is not in {0,-1,-2,...}."""


class PoleBeforeTerminationError(ValueError):
    """A lower-parameter factor (c)_i vanishes before the series terminates."""


class OutOfRangeError(ValueError):
    """Arguments left the declared parameter domain."""


@dataclass(frozen=True)
class HypergeometricParams:
    """Parameter bundle (a, b, c; z) for a terminating Gauss series."""

    a: Fraction
    b: Fraction
    c: Fraction
    z: Fraction

    @classmethod
    def make(cls, a: Scalar, b: Scalar, c: Scalar, z: Scalar) -> "HypergeometricParams":
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(z))

    def as_dict(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
            "z": format_rational(self.z),
        }


def pochhammer(alpha: Scalar, n: int) -> Fraction:
    """Rising factorial alpha (alpha+1) ... (alpha+n-1); empty product is 1.

    The n = 0 value is 1 for every alpha, including alpha = 0.
    """
    if n < 0:
        raise OutOfRangeError(f"pochhammer order must be >= 0, got {n}")
    alpha = Fraction(alpha)
    acc = Fraction(1)
    for i in range(n):
        acc *= alpha + i
    return acc


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! for n >= 0, with the empty product (-1)!! = 1."""
    if n < 0:
        raise OutOfRangeError(f"need n >= 0, got {n}")
    acc = 1
    for i in range(1, n + 1):
        acc *= 2 * i - 1
    return acc


def half_binomial(n: int, k: int) -> Fraction:
    """(2n-1)!! / ((2n-2k-1)!! (2k-1)!!); generally not an integer."""
    if not 0 <= k <= n:
        raise OutOfRangeError(f"need 0 <= k <= n, got n={n}, k={k}")
    return Fraction(
        double_factorial_odd(n), double_factorial_odd(n - k) * double_factorial_odd(k)
    )


def _termination_order(a: Fraction) -> int:
    if a.denominator != 1 or a > 0:
        raise NonTerminatingError(f"first parameter must be a nonpositive integer, got {a}")
    return -int(a)


def _check_poles(c: Fraction, order: int) -> None:
    # (c)_i vanishes for some i <= order exactly when c in {0, -1, ..., -(order-1)}
    if c.denominator == 1 and -(order - 1) <= int(c) <= 0:
        raise PoleBeforeTerminationError(
            f"lower parameter c={c} hits a pole before the series terminates (length {order + 1})"
        )


def hyp2f1_terminating(a: Scalar, b: Scalar, c: Scalar, z: Scalar) -> Fraction:
    """Exact value of the terminating Gauss series F(a, b, c; z).

    Requires a in {0, -1, -2, ...}; raises PoleBeforeTerminationError when a
    factor of (c)_i vanishes within the |a|+1 summed terms.
    """
    a, b, c, z = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    order = _termination_order(a)
    _check_poles(c, order)
    total = Fraction(0)
    term = Fraction(1)
    for i in range(order + 1):
        total += term
        if i < order:
            term *= (a + i) * (b + i) * z / ((c + i) * (i + 1))
    return total


def hyp2f1_poly(a: Scalar, b: Scalar, c: Scalar) -> Polynomial:
    """F(a, b, c; z) as a polynomial in z, built term-by-term from Pochhammer ratios.

    Independent of hyp2f1_terminating's running-term update, so the two routes
    cross-check each other.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    order = _termination_order(a)
    _check_poles(c, order)
    coeffs = [
        pochhammer(a, i) * pochhammer(b, i) / (pochhammer(c, i) * math.factorial(i))
        for i in range(order + 1)
    ]
    return Polynomial(coeffs)


def hyp2f1_from_params(params: HypergeometricParams) -> Fraction:
    return hyp2f1_terminating(params.a, params.b, params.c, params.z)


def pfaff_instance(r: int, m: int, n: int, z: Scalar) -> HypergeometricParams:
    """Parameters (a, b, c; z) = (-2r, 1/2 + m, 1/2 - n - 2r; z) of the Pfaff bridge."""
    if r < 1 or m < 0 or n < 0:
        raise OutOfRangeError(f"need r >= 1 and m, n >= 0, got r={r}, m={m}, n={n}")
    return HypergeometricParams.make(-2 * r, Fraction(1, 2) + m, Fraction(1, 2) - n - 2 * r, z)


def pfaff_check(params: HypergeometricParams) -> bool:
    """Exact check of the Pfaff transformation at the given parameters.

        F(a, b, c; -z) = (1+z)^{-a} F(a, c-b, c; z/(1+z))

    With (a, b, c) = (-2r, 1/2+m, 1/2-n-2r) this is the identity that carries
    the moment expansion onto the c-minus-b form; z = -1 is excluded.
    """
    a, b, c, z = params.a, params.b, params.c, params.z
    order = _termination_order(a)
    if z == -1:
        raise OutOfRangeError("z = -1 is outside the Pfaff transformation's domain")
    lhs = hyp2f1_terminating(a, b, c, -z)
    rhs = (1 + z) ** order * hyp2f1_terminating(a, c - b, c, z / (1 + z))
    return lhs == rhs


def _scaled(coef: Fraction, a: Fraction, b: Fraction, c: Fraction, z: Fraction) -> Fraction:
    # Zero coefficients short-circuit so a shifted series that would fail to
    # terminate is never evaluated when it does not contribute.
    if coef == 0:
        return Fraction(0)
    return coef * hyp2f1_terminating(a, b, c, z)


def contiguous_check(relation: ContiguousRelation, params: HypergeometricParams) -> bool:
    """Exact check of one Gauss contiguous relation (or the derivative formula).

    R38:  c(1-z) F - c F(a-1) + (c-b) z F(c+1) = 0
    R32:  (b-a) F + a F(a+1) - b F(b+1) = 0
    R40:  [c - 2b + (b-a) z] F + b(1-z) F(b+1) - (c-b) F(b-1) = 0
    DIFF: d/dz F(a,b,c;z) = (ab/c) F(a+1,b+1,c+1;z), compared coefficient-by-
          coefficient as polynomials in z (params.z is ignored).
    """
    a, b, c, z = params.a, params.b, params.c, params.z
    if relation == "R38":
        value = (
            _scaled(c * (1 - z), a, b, c, z)
            - _scaled(c, a - 1, b, c, z)
            + _scaled((c - b) * z, a, b, c + 1, z)
        )
        return value == 0
    if relation == "R32":
        value = (
            _scaled(b - a, a, b, c, z)
            + _scaled(a, a + 1, b, c, z)
            - _scaled(b, a, b + 1, c, z)
        )
        return value == 0
    if relation == "R40":
        value = (
            _scaled(c - 2 * b + (b - a) * z, a, b, c, z)
            + _scaled(b * (1 - z), a, b + 1, c, z)
            - _scaled(c - b, a, b - 1, c, z)
        )
        return value == 0
    if relation == "DIFF":
        lhs = hyp2f1_poly(a, b, c).derivative()
        if a == 0 or b == 0:
            rhs = Polynomial()
        else:
            rhs = (a * b / c) * hyp2f1_poly(a + 1, b + 1, c + 1)
        return lhs == rhs
    raise OutOfRangeError(f"unknown relation {relation!r}; expected one of {CONTIGUOUS_RELATIONS}")
