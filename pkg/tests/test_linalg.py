import pytest
from hypothesis import given, strategies as st

from onbdual.field import GF
from onbdual.linalg import (
    Matrix,
    SingularMatrixError,
    inverse,
    mat_solve,
    mat_solve_many,
    permutation_matrix,
    rank,
)


def test_identity_solve():
    F = GF(3)
    v = [F(2), F(0), F(1)]
    assert mat_solve(Matrix.identity(F, 3), v) == v


def test_two_by_two_over_f2():
    F = GF(2)
    M = Matrix(F, [[0, 1], [1, 1]])
    assert mat_solve(M, [F(1), F(0)]) == [F(1), F(1)]


def test_singular_matrix():
    F = GF(5)
    M = Matrix(F, [[1, 2], [2, 4]])
    assert rank(M) == 1
    with pytest.raises(SingularMatrixError, match="not invertible"):
        mat_solve(M, [F(1), F(1)])


def test_shape_checks():
    F = GF(2)
    with pytest.raises(ValueError):
        Matrix(F, [[1, 0], [1]])
    with pytest.raises(ValueError):
        mat_solve(Matrix(F, [[1, 0]]), [F(1)])
    with pytest.raises(ValueError):
        mat_solve(Matrix.identity(F, 2), [F(1)])


def test_permutation_matrix_inverse_is_transpose():
    F = GF(7)
    P = permutation_matrix(F, [0, 2, 3, 1])
    assert P @ P.transpose() == Matrix.identity(F, 4)
    assert inverse(P) == P.transpose()


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square, st.data())
def test_solve_then_multiply(rows, data):
    F = GF(7)
    M = Matrix(F, rows)
    n = M.rows
    vs = [[F(data.draw(st.integers(0, 6))) for _ in range(n)] for _ in range(2)]
    if rank(M) < n:
        with pytest.raises(SingularMatrixError):
            mat_solve_many(M, vs)
        return
    for v, x in zip(vs, mat_solve_many(M, vs)):
        col = M @ Matrix(F, [[xi] for xi in x])
        assert [r[0] for r in col.entries] == v
    assert M @ inverse(M) == Matrix.identity(F, n)
