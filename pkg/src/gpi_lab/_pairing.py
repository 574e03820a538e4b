"""Brute-force Wick pairing sum.

This is the anti-hallucination oracle for the memoized moment recursion: it
enumerates every perfect matching of the multiset of factors and sums the
covariance products.  Deliberately unmemoized and kept out of the public API;
only the test suite and the CLI's --oracle flag use it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .moments import CovarianceMatrix, DimensionMismatchError, validate_exponents


def pairing_moment(cov: CovarianceMatrix, exponents: Sequence[int]) -> Fraction:
    k = validate_exponents(exponents)
    if len(k) != cov.dim:
        raise DimensionMismatchError(f"{len(k)} exponents for a {cov.dim}x{cov.dim} covariance")
    factors: list[int] = []
    for coord, count in enumerate(k):
        factors.extend([coord] * count)
    if len(factors) % 2 == 1:
        return Fraction(0)
    entries = cov.entries

    def match(rest: tuple[int, ...]) -> Fraction:
        if not rest:
            return Fraction(1)
        first, tail = rest[0], rest[1:]
        total = Fraction(0)
        for pos in range(len(tail)):
            total += entries[first][tail[pos]] * match(tail[:pos] + tail[pos + 1 :])
        return total

    return match(tuple(factors))
