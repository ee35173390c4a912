from fractions import Fraction

import pytest

from sullivan import linalg
from sullivan.linalg import RationalMatrix, rref, solve, kernel_basis


def F(x):
    return Fraction(x)


def test_rref_identity():
    red, pivots, rank = rref([[1, 0], [0, 1]])
    assert red.rows == [[1, 0], [0, 1]]
    assert pivots == [0, 1]
    assert rank == 2


def test_rref_idempotent():
    m = [[2, 4, 1], [1, 2, 3], [3, 6, 4]]
    red1, p1, r1 = rref(m)
    red2, p2, r2 = rref(red1)
    assert red1.rows == red2.rows and p1 == p2


def test_rref_pivot_entries_are_one_and_increasing():
    m = [[0, 2, 1], [0, 4, 3], [5, 0, 0]]
    red, pivots, rank = rref(m)
    assert pivots == sorted(pivots)
    for r, c in enumerate(pivots):
        assert red.rows[r][c] == 1
        for rr in range(len(red.rows)):
            if rr != r:
                assert red.rows[rr][c] == 0


def test_solve_scalar():
    assert solve([[2]], [1]) == [F("1/2")]


def test_solve_free_variables_zero():
    # x + y = 1 has the representative (1, 0)
    assert solve([[1, 1]], [1]) == [1, 0]


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_solve_exactness():
    m = [[F("1/3"), 2, 1], [5, F("7/2"), 0], [1, 1, 1]]
    b = [1, F("2/7"), 3]
    x = solve(m, b)
    for row, rhs in zip(m, b):
        assert sum(a * v for a, v in zip(row, x)) == rhs


def test_kernel_single_relation():
    assert kernel_basis([[1, 1]]) == [[-1, 1]]


def test_kernel_orthogonality_and_rank_nullity():
    m = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    basis = kernel_basis(m)
    _, _, rank = rref(m)
    assert rank + len(basis) == 4
    for v in basis:
        for row in m:
            assert sum(a * x for a, x in zip(row, v)) == 0


def test_matrix_validation():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        RationalMatrix([[1]], row_labels=["a", "b"])
    with pytest.raises(ValueError):
        solve([[1, 2]], [1, 2])


def test_row_space_basis_is_canonical():
    a = linalg.row_space_basis([[1, 2], [3, 6], [0, 1]])
    b = linalg.row_space_basis([[0, 1], [2, 4]])
    assert a == b
    assert linalg.spans_equal([[1, 1], [1, -1]], [[1, 0], [0, 1]])
    assert not linalg.spans_equal([[1, 1]], [[1, 0], [0, 1]])
