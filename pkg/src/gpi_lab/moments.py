"""Exact mixed moments of centered Gaussian vectors with rational covariance.

The central operation is the Isserlis/Wick recursion on exponent vectors,
memoized per top-level call.  Covariance validity (exact symmetry and positive
semidefiniteness) is certified at construction time with a fraction-free
elimination; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import Scalar, SplitMix64, format_rational, parse_rational


class NotSymmetricError(ValueError):
    """Matrix handed to the PSD test is not exactly symmetric (or not square)."""


class InvalidCovarianceError(ValueError):
    """Entries do not form a positive semidefinite symmetric matrix."""


class DimensionMismatchError(ValueError):
    """Exponent vector length does not match the covariance dimension."""


Exponents = tuple[int, ...]


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination with row pivoting."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            if factor == 0:
                continue
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


def principal_minor(rows: Sequence[Sequence[Scalar]], indices: Sequence[int]) -> Fraction:
    """Determinant of the principal submatrix on the given row/column indices."""
    sub = [[Fraction(rows[i][j]) for j in indices] for i in indices]
    return _det(sub)


@dataclass(frozen=True)
class PsdCertificate:
    """Outcome of the exact PSD test.

    When `psd` is false, `indices` names a principal submatrix whose exact
    determinant `minor` is negative, which any caller can recheck directly.
    """

    psd: bool
    indices: tuple[int, ...] | None = None
    minor: Fraction | None = None

    def __bool__(self) -> bool:
        return self.psd


def is_psd(rows: Sequence[Sequence[Scalar]]) -> PsdCertificate:
    """Exact PSD decision for a symmetric rational matrix.

    Fraction-free in spirit: symmetric elimination over rationals, skipping
    zero pivots whose Schur-complement row has already vanished.  A negative
    pivot, or a zero pivot with a nonzero off-diagonal remainder, pins down a
    negative principal minor that is returned as the certificate.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in a):
        raise NotSymmetricError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")

    eliminated: list[int] = []
    for k in range(n):
        pivot = a[k][k]
        if pivot < 0:
            idx = tuple(eliminated + [k])
            return PsdCertificate(False, idx, principal_minor(rows, idx))
        if pivot == 0:
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    idx = tuple(eliminated + [k, j])
                    return PsdCertificate(False, idx, principal_minor(rows, idx))
            continue
        eliminated.append(k)
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k + 1, n):
                a[i][j] -= factor * a[k][j]
    return PsdCertificate(True)


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric PSD matrix of rationals defining a centered Gaussian vector.

    Construction certifies symmetry and positive semidefiniteness exactly;
    singular (rank-deficient) matrices are deliberately allowed.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        cert = is_psd(self.entries)
        if not cert:
            raise InvalidCovarianceError(
                f"not PSD: principal minor on rows {cert.indices} is {cert.minor}"
            )

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "CovarianceMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def diagonal(cls, variances: Iterable[Scalar]) -> "CovarianceMatrix":
        vs = [Fraction(v) for v in variances]
        n = len(vs)
        return cls.from_rows(
            [[vs[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_json(cls, obj: Mapping) -> "CovarianceMatrix":
        entries = [[parse_rational(x) for x in row] for row in obj["entries"]]
        cov = cls.from_rows(entries)
        if int(obj["dim"]) != cov.dim:
            raise DimensionMismatchError(
                f"declared dim {obj['dim']} but {cov.dim} rows of entries"
            )
        return cov

    def as_json(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.dim)
            for j in range(self.dim)
            if i != j
        )


def exponents_from_json(obj: Mapping) -> Exponents:
    return validate_exponents(obj["exponents"])


def exponents_to_json(exponents: Sequence[int]) -> dict:
    return {"exponents": [int(k) for k in exponents]}


def validate_exponents(exponents: Sequence[int]) -> Exponents:
    ks = tuple(int(k) for k in exponents)
    if any(k < 0 for k in ks):
        raise ValueError(f"exponents must be nonnegative, got {ks}")
    return ks


def gaussian_moment(cov: CovarianceMatrix, exponents: Sequence[int]) -> Fraction:
    """E[prod X_i^{k_i}] for a centered Gaussian vector with the given covariance.

    Wick recursion on the first coordinate j with k_j > 0:

        E[k] = (k_j - 1) cov[j][j] E[k - 2e_j]
               + sum_{i != j} k_i cov[j][i] E[k - e_j - e_i]

    memoized on the exponent tuple within this call.  Odd total degree gives 0;
    the empty product gives 1.
    """
    k = validate_exponents(exponents)
    if len(k) != cov.dim:
        raise DimensionMismatchError(f"{len(k)} exponents for a {cov.dim}x{cov.dim} covariance")
    if sum(k) % 2 == 1:
        return Fraction(0)
    entries = cov.entries
    memo: dict[Exponents, Fraction] = {}

    def rec(ks: Exponents) -> Fraction:
        j = next((i for i, v in enumerate(ks) if v > 0), None)
        if j is None:
            return Fraction(1)
        cached = memo.get(ks)
        if cached is not None:
            return cached
        total = Fraction(0)
        kj = ks[j]
        if kj >= 2:
            lowered = ks[:j] + (kj - 2,) + ks[j + 1 :]
            total += (kj - 1) * entries[j][j] * rec(lowered)
        base = list(ks)
        base[j] = kj - 1
        for i, ki in enumerate(ks):
            if i == j or ki == 0 or entries[j][i] == 0:
                continue
            crossed = base.copy()
            crossed[i] = ki - 1
            total += ki * entries[j][i] * rec(tuple(crossed))
        memo[ks] = total
        return total

    return rec(k)


def univariate_even_moment(variance: Scalar, m: int) -> Fraction:
    """(2m-1)!! * variance^m, the even moment of a centered Gaussian scalar."""
    variance = Fraction(variance)
    if variance < 0:
        raise InvalidCovarianceError(f"variance must be >= 0, got {variance}")
    if m < 0:
        raise ValueError(f"moment order must be >= 0, got {m}")
    acc = Fraction(1)
    for i in range(1, m + 1):
        acc *= 2 * i - 1
    return acc * variance**m


def random_covariance(gen: SplitMix64, d: int, q: int) -> CovarianceMatrix:
    """Gram matrix A A^T of a uniform integer matrix with entries in [-q, q].

    PSD by construction; redrawn whenever a diagonal entry lands on zero so
    every coordinate has positive variance.
    """
    if d < 1 or q < 1:
        raise ValueError(f"need d >= 1 and q >= 1, got d={d}, q={q}")
    while True:
        a = [[gen.randint(-q, q) for _ in range(d)] for _ in range(d)]
        gram = [
            [Fraction(sum(a[i][t] * a[j][t] for t in range(d))) for j in range(d)]
            for i in range(d)
        ]
        if all(gram[i][i] != 0 for i in range(d)):
            return CovarianceMatrix.from_rows(gram)
