"""Exact scalar, polynomial, and PRNG primitives shared by every other module.

Every quantity that enters a verdict is an arbitrary-precision rational
(``fractions.Fraction``); floating point never participates in a comparison.
Polynomials are dense coefficient lists over rationals, and root isolation is
plain bisection driven by exact sign evaluations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[Fraction, int, str]

_MASK64 = (1 << 64) - 1


class SameSignError(ValueError):
    """Bisection was asked to bracket a root between same-sign endpoints."""


def parse_rational(text: Scalar) -> Fraction:
    """Parse "p/q" (or a bare integer "p") into a reduced Fraction.

    Unreduced input and negative denominators are accepted and normalized.
    Binary floats are rejected: they silently encode rounding the exact core
    exists to avoid.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        raise ValueError(f"refusing float {text!r}; pass an exact \"p/q\" string instead")
    if isinstance(text, str) and text.count("/") == 1:
        num, _, den = text.partition("/")
        return Fraction(int(num.strip()), int(den.strip()))
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


class Polynomial:
    """Dense univariate polynomial over rationals; coefficient i multiplies x^i.

    Instances are immutable; the zero polynomial stores an empty tuple and
    reports degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            n = max(len(self.coeffs), len(other.coeffs))
            a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
            for i, c in enumerate(other.coeffs):
                a[i] += c
            return Polynomial(a)
        if isinstance(other, (int, Fraction)):
            return self + Polynomial([other])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (Polynomial, int, Fraction)):
            return self + (-other if isinstance(other, Polynomial) else Polynomial([-Fraction(other)]))
        return NotImplemented

    def __rsub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([other]) - self
        return NotImplemented

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(Fraction(other) * c for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def poly_eval(p: Polynomial, x: Scalar) -> Fraction:
    """Exact Horner evaluation of p at x."""
    return p(x)


def poly_derivative(p: Polynomial) -> Polynomial:
    """Formal derivative; drops the degree of a nonconstant p by one."""
    return p.derivative()


def isolate_root(
    p: Polynomial,
    lo: Scalar,
    hi: Scalar,
    width: Scalar,
) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] around a sign change of p to an interval of at most `width`.

    Requires p(lo) and p(hi) to have opposite signs (SameSignError otherwise);
    an endpoint that is already a root yields the degenerate interval at that
    endpoint.  All sign decisions are exact rational comparisons.
    """
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    f_lo = p(lo)
    if f_lo == 0:
        return (lo, lo)
    f_hi = p(hi)
    if f_hi == 0:
        return (hi, hi)
    if (f_lo > 0) == (f_hi > 0):
        raise SameSignError(f"p({lo}) and p({hi}) share their sign; no bracket")
    while hi - lo > width:
        mid = (lo + hi) / 2
        f_mid = p(mid)
        if f_mid == 0:
            return (mid, mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo, hi)


class SplitMix64:
    """splitmix64 stepping over a 64-bit state.

    Identical seeds produce identical streams on every platform; this is the
    only randomness source in the package, so sweeps replay bit-for-bit.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive; rejection keeps it unbiased."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = ((_MASK64 + 1) // span) * span
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + u % span
