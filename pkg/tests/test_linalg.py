"""Exact linear algebra against a naive Gauss-Jordan oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetradon import linalg
from oracles import gauss_invert, gauss_nullspace, gauss_rank


def test_rref_identity():
    result = linalg.rref(linalg.identity_matrix(4))
    assert result.rank == 4
    assert result.matrix == linalg.identity_matrix(4)
    assert result.pivots == (0, 1, 2, 3)


def test_rref_half_pattern_matrix():
    half = Fraction(1, 2)
    rows = [(half, 0, half, 0), (0, half, 0, half)]
    result = linalg.rref(rows)
    assert result.rank == 2
    assert result.matrix == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_rref_zero_matrix():
    assert linalg.rref([[0, 0], [0, 0], [0, 0]]).rank == 0


def test_nullspace_shapes():
    assert linalg.nullspace(linalg.identity_matrix(3)) == ()
    zero_basis = linalg.nullspace([[0, 0, 0]])
    assert len(zero_basis) == 3


def test_nullspace_vectors_are_in_kernel():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    for vec in linalg.nullspace(rows):
        assert all(
            sum(Fraction(a) * b for a, b in zip(row, vec)) == 0 for row in rows
        )


def test_invert_identity_and_singular():
    assert linalg.invert(linalg.identity_matrix(3)) == linalg.identity_matrix(3)
    assert linalg.invert([[0]]) is None
    assert linalg.invert([[1, 2], [2, 4]]) is None


def test_invert_requires_square():
    with pytest.raises(ValueError):
        linalg.invert([[1, 2, 3], [4, 5, 6]])


def test_apply_and_multiply():
    m = ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))
    assert linalg.apply(m, (1, 1)) == (3, 7)
    assert linalg.multiply(m, linalg.identity_matrix(2)) == m


small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.integers(min_value=1, max_value=5).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=m, max_size=m),
            min_size=n,
            max_size=n,
        )
    )
)


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_rank_nullity_against_oracle(rows):
    result = linalg.rref(rows)
    assert result.rank == gauss_rank(rows)
    assert result.rank + len(linalg.nullspace(rows)) == len(rows[0])
    oracle_basis = gauss_nullspace(rows)
    assert len(linalg.nullspace(rows)) == len(oracle_basis)


@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
@settings(max_examples=150, deadline=None)
def test_invert_against_oracle(rows):
    ours = linalg.invert(rows)
    oracle = gauss_invert(rows)
    if oracle is None:
        assert ours is None
        return
    assert ours is not None
    n = len(rows)
    assert linalg.multiply(ours, linalg.as_matrix(rows)) == linalg.identity_matrix(n)
    assert linalg.multiply(linalg.as_matrix(rows), ours) == linalg.identity_matrix(n)
