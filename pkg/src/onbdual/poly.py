"""Dense univariate polynomials over a finite field."""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .field import ExtensionField, Field, FieldElement, FieldMismatchError


@functools.total_ordering
class _NegativeInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-oo"


NEG_INFINITY = _NegativeInfinity()


class Polynomial:
    """Immutable polynomial with coefficients lowest degree first.

    The stored sequence never ends in a zero coefficient, so the zero
    polynomial has no coefficients and degree :data:`NEG_INFINITY`.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls(field, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def change_ring(self, field: Field) -> "Polynomial":
        """The same polynomial with coefficients lifted into an extension field."""
        return Polynomial(field, [field.lift(c) for c in self.coeffs])

    def _check(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"polynomials over {self.field} and {other.field}")

    def _wrap(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return Polynomial(self.field, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return Polynomial(self.field, [self[i] - other[i] for i in range(n)])

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field)
        F = self.field
        out = [F.raw_zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a.raw, b.raw))
        return Polynomial(F, [FieldElement(F, c) for c in out])

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __pow__(self, k: int):
        result = Polynomial(self.field, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, a: FieldElement) -> FieldElement:
        return poly_eval(self, a)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        inv = self.coeffs[-1].inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def to_nested(self) -> list:
        return [c.to_nested() for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = repr(c)
            if isinstance(self.field, ExtensionField) and "+" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == self.field.one else f"{cs}*{mono}")
        return " + ".join(terms)


def poly_divrem(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    F = f.field
    r = [c.raw for c in f.coeffs]
    b = [c.raw for c in g.coeffs]
    lead_inv = F.inv(b[-1])
    q = [F.raw_zero] * max(len(r) - len(b) + 1, 0)
    for shift in range(len(r) - len(b), -1, -1):
        c = F.mul(r[shift + len(b) - 1], lead_inv)
        q[shift] = c
        if not F.is_zero(c):
            for i, y in enumerate(b):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
    r = r[: len(b) - 1]
    return (Polynomial(F, [FieldElement(F, c) for c in q]),
            Polynomial(F, [FieldElement(F, c) for c in r]))


def poly_derivative(f: Polynomial) -> Polynomial:
    """Formal derivative; the factor ``i`` is reduced in the coefficient field."""
    return Polynomial(f.field, [c * i for i, c in enumerate(f.coeffs) if i > 0])


def poly_eval(f: Polynomial, a: FieldElement) -> FieldElement:
    """Horner evaluation at a point of ``f.field`` or of an extension of it."""
    L = a.field
    acc = L.zero
    for c in reversed(f.coeffs):
        acc = acc * a + L.lift(c)
    return acc


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def _powmod(base: Polynomial, k: int, mod: Polynomial) -> Polynomial:
    result = Polynomial(base.field, [1]) % mod
    base = base % mod
    while k:
        if k & 1:
            result = (result * base) % mod
        k >>= 1
        if k:
            base = (base * base) % mod
    return result


def is_irreducible(f: Polynomial) -> bool:
    """Distinct-degree test: ``gcd(f, x^(q^i) - x) = 1`` for ``i <= deg f / 2``."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("irreducibility is only defined for non-constant polynomials")
    if not f.is_monic():
        raise ValueError("expected a monic polynomial")
    n = f.degree
    if n == 1:
        return True
    q = f.field.order
    x = Polynomial.x(f.field)
    h = x
    for _ in range(n // 2):
        h = _powmod(h, q, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


def minimal_polynomial(a: FieldElement) -> Polynomial:
    """Minimal polynomial over the immediate base field, as the product of
    ``(x - c)`` over the distinct conjugates ``c`` of ``a``."""
    L = a.field
    if not isinstance(L, ExtensionField):
        return Polynomial(L, [-a, 1])
    conj = [a]
    while True:
        nxt = conj[-1].frobenius(1)
        if nxt == a:
            break
        conj.append(nxt)
    prod = Polynomial(L, [1])
    for c in conj:
        prod = prod * Polynomial(L, [-c, 1])
    for c in prod.coeffs:
        if not L.in_base(c):
            raise AssertionError(f"minimal polynomial coefficient {c!r} is outside {L.base}")
    return Polynomial(L.base, [L.project(c) for c in prod.coeffs])


def from_roots(field: Field, roots: Sequence[FieldElement]) -> Polynomial:
    prod = Polynomial(field, [1])
    for r in roots:
        prod = prod * Polynomial(field, [-r, 1])
    return prod
