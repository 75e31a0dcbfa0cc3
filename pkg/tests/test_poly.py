import itertools

import pytest
from hypothesis import given, strategies as st

from onbdual.field import GF
from onbdual.poly import (
    NEG_INFINITY,
    Polynomial,
    is_irreducible,
    minimal_polynomial,
    poly_derivative,
    poly_divrem,
    poly_eval,
)

from conftest import F4, F8, F16, F81, element_at


def monic_polys(F, degree):
    for combo in itertools.product(list(F.elements()), repeat=degree):
        yield Polynomial(F, list(combo) + [F.one])


def irreducible_by_trial_division(f):
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % g).is_zero():
                return False
    return True


def test_zero_polynomial_sentinel():
    z = Polynomial(GF(2), [0, 0])
    assert z.is_zero() and z.coeffs == ()
    assert z.degree is NEG_INFINITY
    assert z.degree < 0 and z.degree < -10 ** 9
    assert Polynomial(GF(2), [1]).degree == 0


def test_divrem_examples():
    E = F4()
    a = E.gen
    f = Polynomial(E, [1, 1, 1])
    q, r = poly_divrem(f, Polynomial(E, [-a, 1]))
    assert q == Polynomial(E, [a ** 2, 1])
    assert r.is_zero()

    F = GF(3)
    f = Polynomial(F, [2, 0, 1, 1])
    assert poly_divrem(f, Polynomial(F, [1])) == (f, Polynomial(F))
    x2 = Polynomial(F, [0, 0, 1])
    assert poly_divrem(x2, Polynomial.x(F)) == (Polynomial.x(F), Polynomial(F))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(f, Polynomial(F))


def test_derivative_examples():
    F = GF(3)
    assert poly_derivative(Polynomial(F, [1, 1, 1, 1, 1])) == Polynomial(F, [1, 2, 0, 1])
    assert poly_derivative(Polynomial(F, [2])).is_zero()
    assert poly_derivative(Polynomial(GF(2), [0, 0, 1])).is_zero()


def test_eval_examples():
    for p, n in [(2, 4), (3, 4), (5, 6)]:
        F = GF(p)
        f = Polynomial(F, [1] * (n + 1))
        assert poly_eval(f, F.one) == F(n + 1)
        assert poly_eval(f, F.zero) == f[0]
    E = F16()
    assert poly_eval(Polynomial(GF(2), [1, 1, 1, 1, 1]), E.gen).is_zero()


def test_irreducible_examples():
    F = GF(2)
    assert is_irreducible(Polynomial(F, [1, 1, 1]))
    assert not is_irreducible(Polynomial(F, [1, 0, 1]))
    assert is_irreducible(Polynomial(F, [1, 1, 1, 1, 1]))
    assert irreducible_by_trial_division(Polynomial(F, [1, 1, 1, 1, 1]))
    with pytest.raises(ValueError):
        is_irreducible(Polynomial(F, [1]))
    with pytest.raises(ValueError):
        is_irreducible(Polynomial(GF(3), [1, 2]))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_irreducible_agrees_with_trial_division(p, degree):
    for f in monic_polys(GF(p), degree):
        assert is_irreducible(f) == irreducible_by_trial_division(f), f


def test_irreducible_over_extension_base():
    F = GF(2, 2)
    for f in monic_polys(F, 2):
        assert is_irreducible(f) == irreducible_by_trial_division(f), f


def test_minimal_polynomial_examples():
    assert minimal_polynomial(F16().gen) == Polynomial(GF(2), [1, 1, 1, 1, 1])
    assert minimal_polynomial(F81().gen) == Polynomial(GF(3), [1, 1, 1, 1, 1])
    E = F4()
    assert minimal_polynomial(E.gen + 1) == Polynomial(GF(2), [1, 1, 1])
    assert minimal_polynomial(E.one) == Polynomial(GF(2), [1, 1])
    assert minimal_polynomial(GF(5)(3)) == Polynomial(GF(5), [2, 1])


@pytest.mark.parametrize("E", [F8(), F16(), F81(), GF(3, 2)])
def test_minimal_polynomial_divides_field_polynomial(E):
    n, q = E.degree, E.base.order
    x = Polynomial.x(E.base)
    field_poly = x ** (q ** n) - x
    for k in range(0, E.order, max(1, E.order // 20)):
        a = element_at(E, k)
        m = minimal_polynomial(a)
        assert m.is_monic()
        assert poly_eval(m, a).is_zero()
        assert (field_poly % m).is_zero()
        assert n % m.degree == 0
        assert is_irreducible(m)


coeff_lists = st.lists(st.integers(0, 4), max_size=7)


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divrem_round_trip(fc, gc):
    F = GF(5)
    f, g = Polynomial(F, fc), Polynomial(F, gc)
    q, r = poly_divrem(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(coeff_lists, coeff_lists, st.integers(0, 4))
def test_eval_is_a_ring_map(fc, gc, x):
    F = GF(5)
    f, g, a = Polynomial(F, fc), Polynomial(F, gc), F(x)
    assert poly_eval(f * g, a) == poly_eval(f, a) * poly_eval(g, a)
    assert poly_eval(f + g, a) == poly_eval(f, a) + poly_eval(g, a)


@given(coeff_lists, coeff_lists)
def test_derivative_product_rule(fc, gc):
    F = GF(5)
    f, g = Polynomial(F, fc), Polynomial(F, gc)
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
