"""Shared hypothesis strategies for the exact-arithmetic suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from gpi_lab import CovarianceMatrix, Polynomial


def rationals(max_num: int = 50, max_den: int = 20) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def polynomials(max_degree: int = 6) -> st.SearchStrategy[Polynomial]:
    return st.builds(
        Polynomial,
        st.lists(rationals(max_num=12, max_den=8), min_size=0, max_size=max_degree + 1),
    )


@st.composite
def gram_covariances(draw, min_dim: int = 1, max_dim: int = 3, q: int = 3):
    """PSD-by-construction integer Gram matrices A A^T."""
    d = draw(st.integers(min_dim, max_dim))
    a = draw(
        st.lists(
            st.lists(st.integers(-q, q), min_size=d, max_size=d),
            min_size=d,
            max_size=d,
        )
    )
    gram = [
        [Fraction(sum(a[i][t] * a[j][t] for t in range(d))) for j in range(d)]
        for i in range(d)
    ]
    return CovarianceMatrix.from_rows(gram)


@st.composite
def bounded_exponents(draw, dim: int, total: int = 8):
    ks = [draw(st.integers(0, 4)) for _ in range(dim)]
    while sum(ks) > total:
        idx = draw(st.integers(0, dim - 1))
        if ks[idx] > 0:
            ks[idx] -= 1
    return tuple(ks)
