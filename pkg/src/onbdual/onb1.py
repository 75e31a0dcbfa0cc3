"""Type I optimal normal bases and their duals.

For ``n + 1`` prime and ``q`` primitive modulo ``n + 1``, the nonunit
``(n+1)``-th roots of unity form a normal basis of ``F_{q^n}`` over ``F_q``
generated by the residue ``alpha`` of ``x`` modulo ``1 + x + ... + x^n``.
Its trace dual is again normal, generated by ``(alpha - 1) / (n + 1)``.

Bases are index-aligned with the Frobenius order ``alpha^(q^j)``.  The dual
element of ``alpha^(q^j)`` is ``(alpha^(-q^j) - 1) / (n + 1)``; use
:func:`dual_in_exponent_order` for the listing paired with
``alpha, alpha^2, ..., alpha^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .basis import (
    MultTable,
    OrderedBasis,
    check_duality,
    complexity,
    dual_basis_oracle,
    multiplication_table,
    normal_closure,
)
from .field import ExtensionField, Field, FieldElement, is_prime, multiplicative_order
from .linalg import Matrix, permutation_matrix
from .poly import Polynomial, is_irreducible, minimal_polynomial, poly_derivative, poly_divrem, poly_eval


class InvalidParameters(ValueError):
    """The pair (q, n) does not admit a type I optimal normal basis."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


@dataclass(frozen=True)
class Type1Params:
    q_field: Field
    n: int

    @property
    def q(self) -> int:
        return self.q_field.order

    @property
    def n_plus_1(self) -> int:
        return self.n + 1

    @property
    def even(self) -> bool:
        """q is even exactly when the characteristic is 2."""
        return self.q_field.characteristic == 2


def validate_params(q_field: Field, n: int) -> Type1Params:
    if n < 2:
        raise InvalidParameters("n < 2 unsupported")
    if not is_prime(n + 1):
        raise InvalidParameters("n+1 not prime")
    if q_field.order % (n + 1) == 0 or multiplicative_order(q_field.order, n + 1) != n:
        raise InvalidParameters("q not primitive mod n+1")
    return Type1Params(q_field, n)


@dataclass(frozen=True)
class Type1Field:
    params: Type1Params
    field: ExtensionField
    alpha: FieldElement

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def base(self) -> Field:
        return self.field.base

    def basis(self) -> OrderedBasis:
        """The type I normal basis ``alpha^(q^j)``, j = 0..n-1."""
        return normal_closure(self.alpha)

    def n_plus_1(self) -> FieldElement:
        """``(n + 1) * 1`` in the base field; nonzero for valid parameters."""
        return self.base(self.n + 1)


def build_type1(params: Type1Params) -> Type1Field:
    F = params.q_field
    n = params.n
    f = Polynomial(F, [1] * (n + 1))
    _require(is_irreducible(f), f"{f!r} is reducible over {F}")
    L = ExtensionField(F, [1] * (n + 1), check=False)
    alpha = L.gen
    _require(alpha ** (n + 1) == L.one and alpha != L.one, "alpha is not a nonunit root of unity")
    tf = Type1Field(params, L, alpha)
    T = multiplication_table(alpha)
    _require(complexity(T) == 2 * n - 1, f"type I basis has complexity {complexity(T)}, not {2 * n - 1}")
    return tf


def alpha_fprime(tf: Type1Field) -> FieldElement:
    """``alpha * f'(alpha)``, checked against ``(n + 1) / (alpha - 1)``."""
    n = tf.n
    f = Polynomial(tf.base, [1] * (n + 1))
    direct = tf.alpha * poly_eval(poly_derivative(f), tf.alpha)
    closed = tf.field.lift(tf.n_plus_1()) / (tf.alpha - 1)
    _require(direct == closed, f"alpha*f'(alpha) = {direct!r} but (n+1)/(alpha-1) = {closed!r}")
    return direct


def beta_coeffs(tf: Type1Field) -> list[FieldElement]:
    """Coefficients of ``f(x) / (x - alpha)`` from the geometric-sum closed form,
    checked against polynomial division."""
    n, a, L = tf.n, tf.alpha, tf.field
    denom = (a - 1).inverse()
    closed = [(a ** (n - i) - 1) * denom for i in range(n)]
    f = Polynomial(L, [1] * (n + 1))
    quot, rem = poly_divrem(f, Polynomial(L, [-a, 1]))
    _require(rem.is_zero(), "alpha is not a root of f")
    _require([quot[i] for i in range(n)] == closed, "closed-form cofactor disagrees with division")
    return closed


def _closed_form_dual(tf: Type1Field) -> list[FieldElement]:
    L, a = tf.field, tf.alpha
    scale = L.lift(tf.n_plus_1()).inverse()
    a_inv = a.inverse()
    q = tf.base.order
    out = []
    x = a_inv
    for _ in range(tf.n):
        out.append((x - 1) * scale)
        x = x ** q
    return out


def closed_form_dual(tf: Type1Field) -> OrderedBasis:
    """Dual basis of the type I basis, index-aligned with the Frobenius order."""
    N = tf.basis()
    dual = _closed_form_dual(tf)
    _require(check_duality(N.elements, dual), "closed-form dual violates the trace conditions")
    oracle = dual_basis_oracle(N)
    _require(list(oracle.elements) == dual, "closed-form dual disagrees with the Gram oracle")
    return OrderedBasis(tf.field, dual, "normal")


def dual_in_exponent_order(tf: Type1Field) -> list[FieldElement]:
    """Dual elements paired with ``alpha, alpha^2, ..., alpha^n`` in that order,
    i.e. ``(alpha^(n+1-i) - 1) / (n + 1)`` for i = 1..n."""
    L, a = tf.field, tf.alpha
    scale = L.lift(tf.n_plus_1()).inverse()
    return [(a ** (tf.n + 1 - i) - 1) * scale for i in range(1, tf.n + 1)]


def dual_generator(tf: Type1Field) -> FieldElement:
    """``(alpha - 1) / (n + 1)``, which generates the dual basis as a set."""
    L = tf.field
    g = (tf.alpha - 1) / L.lift(tf.n_plus_1())
    M = normal_closure(g)
    _require(M.as_set() == closed_form_dual(tf).as_set(),
             "conjugates of the dual generator are not the dual basis")
    return g


def _dual_min_poly(tf: Type1Field) -> Polynomial:
    F, n = tf.base, tf.n
    p = F.characteristic
    m = n + 1
    coeffs = []
    for j in range(n + 1):
        s = sum(comb(i, j) for i in range(j, n + 1)) % p
        coeffs.append(F(s) / (F(m) ** (n - j)))
    return Polynomial(F, coeffs)


def dual_min_poly(tf: Type1Field) -> Polynomial:
    """Minimal polynomial of the dual generator from the substitution
    ``f((n+1) x + 1) / (n+1)^n``, checked against the conjugate product."""
    ft = _dual_min_poly(tf)
    g = dual_generator(tf)
    _require(ft.is_monic() and ft.degree == tf.n, "dual minimal polynomial is not monic of degree n")
    _require(poly_eval(ft, g).is_zero(), "dual minimal polynomial does not vanish at the generator")
    _require(ft == minimal_polynomial(g), "formula disagrees with the conjugate product")
    return ft


def permutation_P(params: Type1Params) -> list[int]:
    """One-line notation ``[q^0, q^1, ..., q^(n-1)] mod (n + 1)`` (values 1..n)."""
    m = params.n_plus_1
    perm = [pow(params.q, i, m) for i in range(params.n)]
    _require(sorted(perm) == list(range(1, params.n + 1)), "P is not a permutation")
    return perm


def _conjugated(F: Field, params: Type1Params, inner: list[list[int]]) -> Matrix:
    perm = [k - 1 for k in permutation_P(params)]
    P = permutation_matrix(F, perm)
    C = Matrix(F, inner)
    return P @ C @ P.transpose()


def primal_pattern(n: int) -> list[list[int]]:
    """Superdiagonal of ones and a last row of -1: the table in exponent order."""
    C = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        C[i][i + 1] = 1
    C[n - 1] = [-1] * n
    return C


def dual_pattern(n: int) -> list[list[int]]:
    """Integer pattern of ``(alpha - 1)(alpha^i - 1)`` over the elements ``alpha^k - 1``."""
    D = [[0] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = -1
        if i + 1 < n:
            D[i][i + 1] = 1
        D[i][0] -= 1
    return D


def structured_primal_matrix(tf: Type1Field) -> Matrix:
    return _conjugated(tf.base, tf.params, primal_pattern(tf.n))


def structured_dual_matrix(tf: Type1Field) -> Matrix:
    F = tf.base
    return _conjugated(F, tf.params, dual_pattern(tf.n)) * F(tf.n + 1).inverse()


def structured_table_primal(tf: Type1Field) -> MultTable:
    T = multiplication_table(tf.alpha)
    S = structured_primal_matrix(tf)
    _require(S == T.entries, "P C P^-1 disagrees with the brute-force table")
    return MultTable(tf.alpha, S, T.basis)


def structured_table_dual(tf: Type1Field) -> MultTable:
    g = (tf.alpha - 1) / tf.field.lift(tf.n_plus_1())
    T = multiplication_table(g)
    S = structured_dual_matrix(tf)
    _require(S == T.entries, "P D P^-1 / (n+1) disagrees with the brute-force table")
    return MultTable(g, S, T.basis)


@dataclass(frozen=True)
class TheoremReport:
    c_primal: int
    c_dual: int
    expected_dual: int
    structured_match: bool
    passed: bool


def expected_dual_complexity(params: Type1Params) -> int:
    return 3 * params.n - 3 if params.even else 3 * params.n - 2


def verify_theorem(params: Type1Params) -> TheoremReport:
    """Count both complexities by brute force and compare with the closed counts.

    The dual basis here comes from the Gram oracle, not from the closed form.
    """
    tf = build_type1(params)
    n = params.n
    T = multiplication_table(tf.alpha)
    M = dual_basis_oracle(T.basis)
    TM = multiplication_table(M[0])
    g = (tf.alpha - 1) / tf.field.lift(tf.n_plus_1())
    structured_match = (
        structured_primal_matrix(tf) == T.entries
        # a conjugate generator has the same table as the generator itself
        and structured_dual_matrix(tf) == TM.entries
        and structured_dual_matrix(tf) == multiplication_table(g).entries
    )
    c_primal = complexity(T)
    c_dual = complexity(TM)
    expected = expected_dual_complexity(params)
    return TheoremReport(
        c_primal=c_primal,
        c_dual=c_dual,
        expected_dual=expected,
        structured_match=structured_match,
        passed=c_primal == 2 * n - 1 and c_dual == expected and structured_match,
    )
