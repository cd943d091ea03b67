from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homtrias.linalg import (
    Matrix, charpoly, format_scalar, in_span, nullspace_basis, parse_scalar, pivot_values, rank, rref,
    same_span, stack,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    # sparse-ish entries so that rank deficiency actually shows up
    entry = st.one_of(st.just(Fraction(0)), fractions)
    return Matrix.from_rows([[draw(entry) for _ in range(c)] for _ in range(r)])


def test_scalar_text_round_trip():
    assert parse_scalar("-3/6") == Fraction(-1, 2)
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(Fraction(4)) == "4"
    with pytest.raises(ValueError):
        parse_scalar("1/0")
    with pytest.raises(ValueError):
        parse_scalar("0.5.1")


def test_rref_known_example():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    reduced, rk, pivots = rref(m)
    assert rk == 2 and pivots == [0, 1]
    assert reduced.to_rows() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]


def test_nullspace_canonical_basis():
    m = Matrix.from_rows([[1, 1, 0, 0]])
    basis = nullspace_basis(m)
    assert basis == [(-1, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def test_pivot_values_are_unnormalised():
    m = Matrix.from_rows([[2, 0], [0, 3]])
    assert pivot_values(m) == [2, 3]


def test_span_helpers():
    assert in_span((2, 2), [(1, 1)])
    assert not in_span((1, 0), [(1, 1)])
    assert same_span([(1, 0), (0, 1)], [(1, 1), (1, -1)])
    assert not same_span([(1, 0)], [(1, 0), (0, 1)])


def test_stack_with_empty_blocks():
    assert stack(Matrix.zeros(0, 3), Matrix.from_rows([[1, 2, 3]]), cols=3).rows == 1


def test_charpoly_small():
    # t^2 - 2t + 1 for a unipotent Jordan block
    assert charpoly(Matrix.from_rows([[1, 1], [0, 1]])) == [1, -2, 1]
    assert charpoly(Matrix.zeros(3, 3)) == [1, 0, 0, 0]


@given(matrices(max_dim=12))
def test_rank_plus_nullity_and_back_substitution(m):
    basis = nullspace_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert all(sum(m[i, j] * v[j] for j in range(m.cols)) == 0 for i in range(m.rows))


@given(matrices())
def test_rref_idempotent(m):
    reduced, rk, piv = rref(m)
    again, rk2, piv2 = rref(reduced)
    assert again == reduced and rk == rk2 and piv == piv2


@st.composite
def square_matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return Matrix.from_rows([[draw(fractions) for _ in range(n)] for _ in range(n)])


@given(square_matrices())
def test_cayley_hamilton(m):
    n = m.rows
    acc = Matrix.zeros(n, n)
    for c in charpoly(m):  # Horner from the leading coefficient
        acc = acc @ m + Matrix.identity(n).scale(c)
    assert acc.is_zero()


@given(matrices(), matrices())
def test_more_rows_never_raise_nullity(a, b):
    if a.cols != b.cols:
        return
    assert len(nullspace_basis(stack(a, b))) <= len(nullspace_basis(a))
