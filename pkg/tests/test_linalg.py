from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superconf.linalg import identity, inverse, matmul, nullspace, rank, sparse_nullspace, transpose

entries = st.integers(min_value=-4, max_value=4).map(F)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_identity_and_transpose():
    assert identity(2) == [[1, 0], [0, 1]]
    assert transpose([[1, 2, 3]]) == [[1], [2], [3]]


def test_inverse_of_known_matrix():
    assert inverse([[F(2), F(1)], [F(1), F(1)]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        inverse([[F(1), F(2)], [F(2), F(4)]])


@given(matrices(3, 3))
def test_inverse_is_two_sided(m):
    if rank(m) < 3:
        with pytest.raises(ValueError):
            inverse(m)
        return
    inv = inverse(m)
    assert matmul(m, inv) == identity(3)
    assert matmul(inv, m) == identity(3)


@given(matrices(3, 5))
def test_rank_nullity(m):
    ker = nullspace(m, 5)
    assert rank(m) + len(ker) == 5
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    if ker:
        assert rank(ker) == len(ker)


def test_sparse_nullspace_with_empty_rows():
    assert sparse_nullspace([], 2) == [{0: 1}, {1: 1}]
    assert sparse_nullspace([{0: F(1), 1: F(-1)}], 2) == [{1: 1, 0: 1}]
