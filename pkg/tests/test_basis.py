import itertools

import pytest
from hypothesis import given, strategies as st

from onbdual.basis import (
    MultTable,
    NotABasisError,
    NotNormalError,
    OrderedBasis,
    check_duality,
    complexity,
    conjugates,
    dual_basis_oracle,
    dual_of_polynomial_basis,
    gram_matrix,
    is_basis,
    is_normal,
    multiplication_table,
    normal_closure,
    polynomial_basis,
    scalar_weak_equivalence,
)
from onbdual.field import GF, ExtensionField
from onbdual.linalg import Matrix
from onbdual.poly import Polynomial, minimal_polynomial, poly_divrem

from conftest import F4, F8, F16, F81, element_at


def dual_by_enumeration(B):
    """For each j, the unique field element d with Tr(b_i d) = delta_ij."""
    L = B.field
    out = []
    for j in range(len(B)):
        hits = [d for d in L.elements()
                if all((B[i] * d).trace() == (1 if i == j else 0) for i in range(len(B)))]
        assert len(hits) == 1
        out.append(hits[0])
    return out


def table_by_enumeration(a):
    """Rows of the multiplication table found by searching all coefficient vectors."""
    L = a.field
    conj = conjugates(a)
    scalars = list(L.base.elements())
    rows = []
    for i in range(L.degree):
        target = a * conj[i]
        hits = []
        for t in itertools.product(scalars, repeat=L.degree):
            acc = L.zero
            for c, e in zip(t, conj):
                acc = acc + e.scale(c)
            if acc == target:
                hits.append(list(t))
        assert len(hits) == 1
        rows.append(hits[0])
    return Matrix(L.base, rows)


def test_is_basis_examples():
    E = F4()
    a = E.gen
    assert is_basis([E.one, a])
    assert not is_basis([a, a])
    assert is_basis([a, a ** 2])
    with pytest.raises(ValueError):
        is_basis([a])


def test_ordered_basis_invariants():
    E = F16()
    a = E.gen
    with pytest.raises(NotABasisError):
        OrderedBasis(E, [a, a, a, a])
    with pytest.raises(ValueError):
        OrderedBasis(E, [a, a ** 2, a ** 3, a ** 4], "normal")
    OrderedBasis(E, [a, a ** 2, a ** 4, a ** 8], "normal")
    assert polynomial_basis(a).kind == "polynomial"


def test_normal_closure_examples():
    E = F4()
    assert list(normal_closure(E.gen)) == [E.gen, E.gen ** 2]
    for F in [E, F16(), F81()]:
        with pytest.raises(NotNormalError):
            normal_closure(F.one)
    # x in GF(2)[x]/(x^3+x+1): conjugates x, x^2, x^2+x all have zero constant term
    K = F8()
    with pytest.raises(NotNormalError):
        normal_closure(K.gen)


def test_normal_closure_agrees_with_rank_free_check():
    # a is normal iff its conjugates are independent; check by enumerating all F_2 combinations
    K = F8()
    for a in K.elements():
        conj = conjugates(a)
        dependent = any(
            sum((c for c, bit in zip(conj, bits) if bit), K.zero) == K.zero
            for bits in itertools.product([0, 1], repeat=3) if any(bits)
        )
        assert is_normal(a) == (not dependent)


def test_gram_examples():
    E = F4()
    a = E.gen
    F2 = GF(2)
    assert gram_matrix(normal_closure(a)) == Matrix.identity(F2, 2)
    G = gram_matrix(polynomial_basis(a))
    assert G == Matrix(F2, [[0, 1], [1, 1]])
    assert G == G.transpose()


def test_dual_oracle_examples():
    E = F4()
    a = E.gen
    assert list(dual_basis_oracle(polynomial_basis(a))) == [a ** 2, E.one]
    N = normal_closure(a)
    assert list(dual_basis_oracle(N)) == list(N)


@pytest.mark.parametrize("E", [F8(), F16(), F81(), GF(3, 2)])
def test_dual_oracle_against_enumeration(E):
    for k in range(0, E.order, max(1, E.order // 6)):
        a = element_at(E, k)
        if minimal_polynomial(a).degree != E.degree:
            continue
        B = polynomial_basis(a)
        assert list(dual_basis_oracle(B)) == dual_by_enumeration(B)
        if is_normal(a):
            N = normal_closure(a)
            assert list(dual_basis_oracle(N)) == dual_by_enumeration(N)


def test_dual_of_polynomial_basis_examples():
    E = F4()
    a = E.gen
    assert list(dual_of_polynomial_basis(a)) == [a ** 2, E.one]
    K = F8()
    assert list(dual_of_polynomial_basis(K.gen)) == list(dual_basis_oracle(polynomial_basis(K.gen)))
    with pytest.raises(ValueError):
        dual_of_polynomial_basis(F16().gen ** 5)


def test_degree_one_cofactor_is_one():
    # over F_q itself: f = x - a, the cofactor is 1 and f' = 1, so {1} is self-dual
    F = GF(5)
    a = F(3)
    q, r = poly_divrem(Polynomial(F, [-a, 1]), Polynomial(F, [-a, 1]))
    assert q == Polynomial(F, [1]) and r.is_zero()


def test_multiplication_table_examples():
    E = F4()
    T = multiplication_table(E.gen)
    assert T.entries == Matrix(GF(2), [[0, 1], [1, 1]])
    assert complexity(T) == 3
    assert complexity(multiplication_table(F81().gen)) == 7


def test_table_rejects_wrong_rows():
    E = F4()
    with pytest.raises(ValueError):
        MultTable(E.gen, Matrix(GF(2), [[1, 0], [1, 1]]))
    with pytest.raises(NotNormalError):
        multiplication_table(E.one)


@pytest.mark.parametrize("E", [F8(), F16(), F81(), GF(3, 2), GF(2, 3)])
def test_table_against_enumeration(E):
    checked = 0
    for a in E.elements():
        if not is_normal(a):
            continue
        assert multiplication_table(a).entries == table_by_enumeration(a)
        checked += 1
        if checked == 4:
            break
    assert checked


def test_complexity_examples():
    F = GF(3)
    assert complexity(Matrix(F, [[0, 1], [1, 1]])) == 3
    assert complexity(Matrix.zeros(F, 3, 3)) == 0
    assert complexity(Matrix.identity(F, 4)) == 4


def test_weak_equivalence_examples():
    E = F4()
    assert scalar_weak_equivalence(E.gen) == E.gen
    K = F8()
    for b in K.elements():
        if is_normal(b):
            assert scalar_weak_equivalence(b) is None
    with pytest.raises(NotNormalError):
        scalar_weak_equivalence(F16().one)


NORMAL_FIELDS = [F8(), F16(), F81(), GF(3, 2), GF(2, 3), ExtensionField(GF(2, 3), [1, 1, 1])]


@st.composite
def normal_element(draw):
    E = draw(st.sampled_from(NORMAL_FIELDS))
    k = draw(st.integers(0, E.order - 1))
    for step in range(E.order):
        a = element_at(E, (k + step) % E.order)
        if is_normal(a):
            return a
    raise AssertionError("no normal element")


@given(normal_element())
def test_duality_and_involution(a):
    N = normal_closure(a)
    D = dual_basis_oracle(N)
    assert check_duality(N.elements, D.elements)
    assert list(dual_basis_oracle(D)) == list(N)


@given(normal_element())
def test_dual_of_normal_is_normal(a):
    D = dual_basis_oracle(normal_closure(a))
    assert all(D[i] == D[0].frobenius(i) for i in range(len(D)))
    assert list(normal_closure(D[0])) == list(D)


@given(normal_element(), st.integers(1, 10 ** 6))
def test_complexity_invariant_under_base_scaling(a, k):
    F = a.field.base
    units = [c for c in F.elements() if not c.is_zero()]
    c = units[k % len(units)]
    T = multiplication_table(a)
    Tc = multiplication_table(a.scale(c))
    assert complexity(Tc) == complexity(T)
    assert Tc.entries == T.entries * c


@given(normal_element())
def test_conjugate_generator_has_same_table(a):
    assert multiplication_table(a.frobenius(1)).entries == multiplication_table(a).entries


@given(st.sampled_from([F8(), F16(), F81(), GF(3, 2), GF(5, 2)]), st.integers(0, 10 ** 6))
def test_polynomial_dual_matches_oracle(E, k):
    a = element_at(E, k % E.order)
    if minimal_polynomial(a).degree != E.degree:
        return
    D = dual_of_polynomial_basis(a)
    B = polynomial_basis(a)
    assert list(D) == list(dual_basis_oracle(B))
    assert check_duality(B.elements, D.elements)
