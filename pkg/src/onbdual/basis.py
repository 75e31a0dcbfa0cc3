"""Bases of an extension field over its base: normality, trace-form duals,
multiplication tables and their complexity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .field import ExtensionField, FieldElement
from .linalg import Matrix, mat_solve_many, rank
from .poly import Polynomial, minimal_polynomial, poly_derivative, poly_divrem, poly_eval

KINDS = ("polynomial", "normal", "general")


class NotNormalError(ValueError):
    """The conjugates of an element are linearly dependent."""


class NotABasisError(ValueError):
    pass


def _ambient(elems: Sequence[FieldElement]) -> ExtensionField:
    if not elems:
        raise ValueError("empty element sequence")
    L = elems[0].field
    if not isinstance(L, ExtensionField):
        raise TypeError(f"{L} is not an extension field")
    if any(e.field != L for e in elems):
        raise ValueError("elements from different fields")
    return L


def coordinate_matrix(elems: Sequence[FieldElement]) -> Matrix:
    """Row ``i`` holds the base-field coordinates of ``elems[i]``."""
    L = _ambient(elems)
    return Matrix(L.base, [L.coordinates(e) for e in elems])


def is_basis(elems: Sequence[FieldElement]) -> bool:
    L = _ambient(elems)
    if len(elems) != L.degree:
        raise ValueError(f"expected {L.degree} elements, got {len(elems)}")
    return rank(coordinate_matrix(elems)) == L.degree


@dataclass(frozen=True)
class OrderedBasis:
    """An ordered basis of ``field`` over ``field.base``."""

    field: ExtensionField
    elements: tuple[FieldElement, ...]
    kind: str = "general"

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if len(self.elements) != self.field.degree:
            raise NotABasisError(f"expected {self.field.degree} elements, got {len(self.elements)}")
        if any(e.field != self.field for e in self.elements):
            raise ValueError("basis elements must lie in the declared field")
        if not is_basis(self.elements):
            raise NotABasisError("elements are linearly dependent")
        e = self.elements
        if self.kind == "normal" and any(e[i] != e[i - 1].frobenius(1) for i in range(1, len(e))):
            raise ValueError("elements are not successive conjugates")
        if self.kind == "polynomial" and (
            e[0] != self.field.one or any(e[i] != e[i - 1] * e[1] for i in range(2, len(e)))
        ):
            raise ValueError("elements are not successive powers of one generator")

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(e.raw for e in self.elements)


def polynomial_basis(g: FieldElement) -> OrderedBasis:
    L = g.field
    elems = [L.one]
    for _ in range(L.degree - 1):
        elems.append(elems[-1] * g)
    return OrderedBasis(L, elems, "polynomial")


def conjugates(a: FieldElement) -> list[FieldElement]:
    L = a.field
    return [FieldElement(L, r) for r in L.conjugates(a.raw)]


def normal_closure(a: FieldElement) -> OrderedBasis:
    """The ordered conjugates ``a, a^q, ..., a^(q^(n-1))`` as a normal basis."""
    L = _ambient([a])
    conj = conjugates(a)
    if rank(coordinate_matrix(conj)) != L.degree:
        raise NotNormalError(f"{a!r} is not a normal element")
    return OrderedBasis(L, conj, "normal")


def is_normal(a: FieldElement) -> bool:
    return rank(coordinate_matrix(conjugates(a))) == a.field.degree


def gram_matrix(B: OrderedBasis) -> Matrix:
    """Matrix of the trace form ``Tr(b_i * b_j)``."""
    L = B.field
    n = len(B)
    G = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = (B[i] * B[j]).trace()
    return Matrix(L.base, G)


def _combine(L: ExtensionField, coeffs: Sequence[FieldElement], elems: Sequence[FieldElement]):
    acc = L.zero
    for c, e in zip(coeffs, elems):
        if not c.is_zero():
            acc = acc + e.scale(c)
    return acc


def dual_basis_oracle(B: OrderedBasis) -> OrderedBasis:
    """Trace-dual basis from the inverse Gram matrix.

    ``d_j = sum_k (G^-1)[j][k] * b_k``, so ``d_j`` is dual to ``b_j``.
    """
    L = B.field
    n = len(B)
    G = gram_matrix(B)
    # column j of G^-1 solves G x = e_j; G is symmetric so it is also row j
    cols = mat_solve_many(G, [[L.base.one if i == j else L.base.zero for i in range(n)]
                              for j in range(n)])
    dual = [_combine(L, cols[j], B.elements) for j in range(n)]
    kind = "normal" if B.kind == "normal" else "general"
    return OrderedBasis(L, dual, kind)


def check_duality(B: Sequence[FieldElement], D: Sequence[FieldElement]) -> bool:
    """True iff ``Tr(b_i * d_j)`` is the Kronecker delta for all i, j."""
    n = len(B)
    for i in range(n):
        for j in range(n):
            t = (B[i] * D[j]).trace()
            if t != (1 if i == j else 0):
                return False
    return True


def dual_of_polynomial_basis(alpha: FieldElement) -> OrderedBasis:
    """Dual of ``1, alpha, ..., alpha^(n-1)`` from the cofactor ``f(x) / (x - alpha)``.

    With ``f`` the minimal polynomial of ``alpha``, the dual element of
    ``alpha^i`` is ``beta_i / f'(alpha)`` where ``beta_i`` is the coefficient
    of ``x^i`` in the cofactor.
    """
    L = _ambient([alpha])
    f = minimal_polynomial(alpha)
    if f.degree != L.degree:
        raise ValueError(f"{alpha!r} does not generate {L} over {L.base}")
    fL = f.change_ring(L)
    cofactor, rem = poly_divrem(fL, Polynomial(L, [-alpha, 1]))
    if not rem.is_zero():
        raise AssertionError("alpha is not a root of its minimal polynomial")
    fp = poly_eval(poly_derivative(f), alpha)
    if fp.is_zero():
        raise AssertionError("f'(alpha) vanished; minimal polynomial is not separable")
    inv = fp.inverse()
    dual = [cofactor[i] * inv for i in range(L.degree)]
    return OrderedBasis(L, dual, "general")


@dataclass(frozen=True)
class MultTable:
    """Multiplication table of the normal basis generated by ``generator``.

    Row ``i`` gives the coordinates of ``generator * generator^(q^i)`` in the
    normal basis; the reconstruction is checked on construction.
    """

    generator: FieldElement
    entries: Matrix
    basis: Optional[OrderedBasis] = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        a = self.generator
        L = a.field
        n = L.degree
        if self.entries.rows != n or self.entries.cols != n:
            raise ValueError(f"table must be {n}x{n}")
        if self.entries.field != L.base:
            raise ValueError("table entries must lie in the base field")
        basis = self.basis or normal_closure(a)
        object.__setattr__(self, "basis", basis)
        for i in range(n):
            if _combine(L, self.entries.row(i), basis.elements) != a * basis[i]:
                raise ValueError(f"row {i} does not reconstruct the product")

    @property
    def n(self) -> int:
        return self.entries.rows

    def complexity(self) -> int:
        return self.entries.nonzero_count()


def multiplication_table(a: FieldElement) -> MultTable:
    """Brute-force table: solve for the coordinates of every ``a * a^(q^i)``."""
    N = normal_closure(a)
    L = N.field
    A = coordinate_matrix(N.elements)
    # coords(a * a_i) = t_i A, i.e. A^T t_i^T = coords; one elimination for all rows
    rows = mat_solve_many(A.transpose(), [L.coordinates(a * N[i]) for i in range(len(N))])
    return MultTable(a, Matrix(L.base, rows), N)


def complexity(T) -> int:
    """Number of nonzero entries of a table (or of a bare matrix)."""
    if isinstance(T, MultTable):
        return T.complexity()
    return T.nonzero_count()


def scalar_weak_equivalence(b: FieldElement) -> Optional[FieldElement]:
    """Find ``gamma`` with ``{b^(q^i)} = gamma * {b^i}`` as sets, if one exists.

    Candidates are the ratios ``s / t`` of a conjugate ``s`` and a power ``t``;
    each is checked by set equality.  Returns None when no scalar works.
    """
    L = _ambient([b])
    if not is_normal(b):
        raise NotNormalError(f"{b!r} is not a normal element")
    if minimal_polynomial(b).degree != L.degree:
        raise ValueError(f"{b!r} does not generate {L}")
    conj = conjugates(b)
    powers = polynomial_basis(b).elements
    target = frozenset(c.raw for c in conj)
    tried = set()
    for s, t in itertools.product(conj, powers):
        gamma = s / t
        if gamma.raw in tried:
            continue
        tried.add(gamma.raw)
        if frozenset((gamma * p).raw for p in powers) == target:
            return gamma
    return None
