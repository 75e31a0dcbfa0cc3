"""Exact dense linear algebra over a finite field."""

from __future__ import annotations

from typing import Sequence

from .field import Field, FieldElement, FieldMismatchError


class SingularMatrixError(ArithmeticError):
    """Raised when a linear system has no unique solution."""


class Matrix:
    """An immutable ``rows x cols`` matrix of elements of one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        data = [[field(x) for x in row] for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged matrix rows")
        self.field = field
        self.rows = len(data)
        self.cols = width
        self.entries: tuple[tuple[FieldElement, ...], ...] = tuple(tuple(r) for r in data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> list[FieldElement]:
        return list(self.entries[i])

    def tolist(self) -> list[list[FieldElement]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [[self.entries[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldMismatchError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        F = self.field
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = F.raw_zero
                for k in range(self.cols):
                    acc = F.add(acc, F.mul(self.entries[i][k].raw, other.entries[k][j].raw))
                row.append(FieldElement(F, acc))
            out.append(row)
        return Matrix(F, out)

    def __mul__(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, [[x * c for x in r] for r in self.entries])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def nonzero_count(self) -> int:
        return sum(1 for r in self.entries for x in r if not x.is_zero())

    def to_nested(self) -> list[list]:
        return [[x.to_nested() for x in r] for r in self.entries]

    def __repr__(self):
        body = "; ".join(", ".join(repr(x) for x in r) for r in self.entries)
        return f"Matrix({self.field!r}, [{body}])"


def _eliminate(M: Matrix, rhs: list[list]) -> tuple[list[list], list[list], list[int]]:
    """Gauss-Jordan elimination on raw rows of ``M`` with right-hand sides
    carried along.  ``rhs[i]`` is the i-th right-hand column.  Returns the
    reduced matrix rows, the reduced right-hand sides (as columns) and the
    pivot columns."""
    F = M.field
    A = [[x.raw for x in r] for r in M.entries]
    B = [list(col) for col in rhs]
    pivots = []
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if not F.is_zero(A[i][c])), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            for col in B:
                col[r], col[piv] = col[piv], col[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for col in B:
            col[r] = F.mul(inv, col[r])
        for i in range(M.rows):
            if i != r and not F.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
                for col in B:
                    col[i] = F.sub(col[i], F.mul(f, col[r]))
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return A, B, pivots


def rank(M: Matrix) -> int:
    return len(_eliminate(M, [])[2])


def mat_solve_many(M: Matrix, vs: Sequence[Sequence[FieldElement]]) -> list[list[FieldElement]]:
    """Solve ``M x = v`` for every ``v`` in ``vs`` with a single elimination."""
    if not M.is_square():
        raise ValueError("mat_solve needs a square matrix")
    F = M.field
    cols = []
    for v in vs:
        if len(v) != M.rows:
            raise ValueError(f"right-hand side has length {len(v)}, expected {M.rows}")
        cols.append([F.lift(x).raw for x in v])
    _, B, pivots = _eliminate(M, cols)
    if len(pivots) != M.rows:
        raise SingularMatrixError("not invertible")
    return [[FieldElement(F, x) for x in col] for col in B]


def mat_solve(M: Matrix, v: Sequence[FieldElement]) -> list[FieldElement]:
    """Solve ``M x = v`` exactly; raises :class:`SingularMatrixError`."""
    return mat_solve_many(M, [v])[0]


def inverse(M: Matrix) -> Matrix:
    n = M.rows
    F = M.field
    cols = mat_solve_many(M, [[F.one if i == j else F.zero for i in range(n)] for j in range(n)])
    return Matrix(F, [[cols[j][i] for j in range(n)] for i in range(n)])


def permutation_matrix(field: Field, perm: Sequence[int]) -> Matrix:
    """Matrix with a 1 in row ``i`` at column ``perm[i]`` (0-based)."""
    n = len(perm)
    return Matrix(field, [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])
