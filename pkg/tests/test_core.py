"""Exact-core checks: rational serialization, polynomials, bisection, PRNG."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpi_lab import (
    Polynomial,
    SameSignError,
    SplitMix64,
    format_rational,
    isolate_root,
    parse_rational,
    poly_derivative,
    poly_eval,
)

from conftest import polynomials, rationals

HALF = Fraction(1, 2)


class TestRationalSerialization:
    def test_parse_reduces(self):
        assert parse_rational("6/4") == Fraction(3, 2)

    def test_parse_negative_denominator(self):
        assert parse_rational("3/-6") == Fraction(-1, 2)

    def test_integer_form(self):
        assert parse_rational("7") == 7
        assert format_rational(Fraction(7)) == "7"

    def test_format_reduced(self):
        assert format_rational(Fraction(35, 3)) == "35/3"
        assert format_rational(Fraction(-1, 2)) == "-1/2"

    def test_division_by_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            parse_rational("1/0")

    def test_binary_floats_rejected(self):
        with pytest.raises(ValueError):
            parse_rational(0.1)

    def test_decimal_strings_are_exact(self):
        assert parse_rational("0.1") == Fraction(1, 10)

    @given(rationals())
    def test_roundtrip(self, x):
        assert parse_rational(format_rational(x)) == x

    @given(rationals(), rationals())
    def test_add_then_subtract_is_exact(self, a, b):
        assert (a + b) - b == a

    @given(rationals(), rationals())
    def test_results_stay_reduced(self, a, b):
        results = [a + b, a - b, a * b, a**3]
        if b != 0:
            results.append(a / b)
        for value in results:
            assert value.denominator > 0
            assert math.gcd(abs(value.numerator), value.denominator) == 1


class TestPolynomial:
    def test_zero_polynomial_evaluates_to_zero(self):
        assert poly_eval(Polynomial([0]), Fraction(7, 3)) == 0
        assert Polynomial([0]).coeffs == ()
        assert Polynomial().degree == -1

    def test_perfect_square_root(self):
        p = Polynomial([1, -2, 1])
        assert p(1) == 0

    def test_perfect_square_at_half(self):
        assert Polynomial([1, -2, 1])(HALF) == Fraction(1, 4)

    def test_derivative_of_constant(self):
        assert poly_derivative(Polynomial([5])).is_zero()

    def test_power_rule(self):
        assert poly_derivative(Polynomial([0, 0, 1])) == Polynomial([0, 2])

    def test_derivative_root_matches_eval(self):
        d = poly_derivative(Polynomial([1, -2, 1]))
        assert d == Polynomial([-2, 2])
        assert d(1) == 0

    def test_degree_drop(self):
        p = Polynomial([1, 2, 3, 4])
        assert p.derivative().degree == p.degree - 1

    def test_immutability(self):
        p = Polynomial([1, 2])
        with pytest.raises(AttributeError):
            p.coeffs = ()

    @given(polynomials(), polynomials(), rationals(max_num=10, max_den=6))
    def test_ring_operations_agree_with_evaluation(self, p, q, x):
        assert (p + q)(x) == p(x) + q(x)
        assert (p - q)(x) == p(x) - q(x)
        assert (p * q)(x) == p(x) * q(x)

    @given(polynomials(), polynomials())
    def test_product_rule(self, p, q):
        lhs = (p * q).derivative()
        assert lhs == p.derivative() * q + p * q.derivative()

    @given(
        polynomials(),
        rationals(max_num=8, max_den=5),
        st.integers(3, 6),
    )
    def test_finite_difference_surrogate(self, p, x, k):
        # |(p(x+h)-p(x))/h - p'(x)| <= C h with C = sum |c_i| (|x|+1)^i, |h| <= 1
        h = Fraction(1, 10**k)
        residual = (p(x + h) - p(x)) / h - p.derivative()(x)
        bound = sum(
            (abs(c) * (abs(x) + 1) ** i for i, c in enumerate(p.coeffs)),
            Fraction(0),
        )
        assert abs(residual) <= bound * h


class TestIsolateRoot:
    def test_brackets_half(self):
        p = Polynomial([-1, 0, 4])  # 4x^2 - 1
        lo, hi = isolate_root(p, 0, 1, Fraction(1, 1024))
        assert lo <= HALF <= hi
        assert hi - lo <= Fraction(1, 1024)
        assert p(lo) * p(hi) <= 0

    def test_linear_root(self):
        lo, hi = isolate_root(Polynomial([-1, 2]), 0, 1, HALF)
        assert lo <= HALF <= hi

    def test_same_sign_rejected(self):
        with pytest.raises(SameSignError):
            isolate_root(Polynomial([1, 0, 1]), 0, 1, Fraction(1, 4))

    def test_zero_endpoint_degenerates(self):
        p = Polynomial([0, 1])  # root at 0
        assert isolate_root(p, 0, 1, Fraction(1, 8)) == (0, 0)
        assert isolate_root(Polynomial([-1, 1]), 0, 1, Fraction(1, 8)) == (1, 1)

    @given(
        st.integers(1, 9),
        st.integers(2, 10),
        st.integers(4, 14),
    )
    def test_bracket_always_shrinks_and_brackets(self, num, den, k):
        # Root of den*x - num scaled into (0,1) whenever num < den.
        if num >= den:
            num, den = den, num + 1
        p = Polynomial([-num, den])
        width = Fraction(1, 2**k)
        lo, hi = isolate_root(p, 0, 1, width)
        assert hi - lo <= width
        assert p(lo) * p(hi) <= 0
        assert lo <= Fraction(num, den) <= hi


class TestSplitMix64:
    def test_reference_vectors(self):
        # First three outputs of the reference C implementation for seed 1234567.
        gen = SplitMix64(1234567)
        assert [gen.next_u64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_replay_is_identical(self):
        a = SplitMix64(42)
        b = SplitMix64(42)
        assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]

    def test_different_seeds_differ(self):
        assert SplitMix64(1).next_u64() != SplitMix64(2).next_u64()

    def test_randint_bounds_and_coverage(self):
        gen = SplitMix64(7)
        seen = set()
        for _ in range(500):
            v = gen.randint(-3, 3)
            assert -3 <= v <= 3
            seen.add(v)
        assert seen == set(range(-3, 4))

    def test_randint_empty_range_rejected(self):
        with pytest.raises(ValueError):
            SplitMix64(0).randint(2, 1)
