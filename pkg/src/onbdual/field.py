"""Exact arithmetic in prime fields and towers of extension fields.

A field is described by a :class:`PrimeField` or an :class:`ExtensionField`
over some other field.  Elements are immutable :class:`FieldElement` objects
holding a *raw* value: an ``int`` in ``[0, p)`` for a prime field, and a tuple
of ``degree`` raw base values (lowest degree first) for an extension.  The
raw arithmetic lives on the field objects; elements only dispatch.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Sequence, Union


class FieldMismatchError(ValueError):
    """Raised when an operation mixes elements of different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, m: int) -> int:
    """Order of ``a`` in the unit group of Z/mZ."""
    a %= m
    if m < 2 or a == 0:
        raise ValueError(f"{a} is not a unit modulo {m}")
    phi = m
    for p in prime_factors(m):
        phi = phi // p * (p - 1)
    if pow(a, phi, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order = phi
    for p in prime_factors(phi):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raises ValueError if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


class Field:
    """Shared behaviour of prime and extension fields."""

    order: int
    characteristic: int
    degree: int
    base: "Field | None"

    # raw arithmetic, implemented by subclasses
    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def inv(self, a): raise NotImplementedError

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.raw_zero)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.raw_one)

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, a nested coefficient list, or an element into this field."""
        if isinstance(value, FieldElement):
            return self.lift(value)
        if isinstance(value, int):
            return FieldElement(self, self.raw_from_int(value))
        return FieldElement(self, self.raw_from_nested(value))

    def pow(self, a, k: int):
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.raw_one
        while k:
            if k & 1:
                result = self.mul(result, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return result

    def lift(self, elem: "FieldElement") -> "FieldElement":
        """Embed ``elem`` from a subfield in this field's tower."""
        if elem.field == self:
            return elem
        raise FieldMismatchError(f"{elem.field} is not a subfield of {self}")

    def tower(self) -> list["Field"]:
        """Fields from the prime field up to ``self``."""
        chain = [self]
        while chain[-1].base is not None:
            chain.append(chain[-1].base)
        return chain[::-1]

    def elements(self) -> Iterator["FieldElement"]:
        for raw in self.raw_elements():
            yield FieldElement(self, raw)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, self.raw_random(rng))

    def to_nested(self, raw):
        raise NotImplementedError


class PrimeField(Field):
    """The field Z/pZ."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"{p!r} is not prime")
        self.p = p
        self.order = p
        self.characteristic = p
        self.degree = 1
        self.base = None
        self.raw_zero = 0
        self.raw_one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def raw_from_int(self, k: int):
        return k % self.p

    def raw_from_nested(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"expected an int for an element of {self}, got {value!r}")
        if not 0 <= value < self.p:
            raise ValueError(f"{value} is not a reduced residue modulo {self.p}")
        return value

    def to_nested(self, raw):
        return raw

    def raw_elements(self):
        return iter(range(self.p))

    def raw_random(self, rng):
        return rng.randrange(self.p)


def _strip(coeffs: list, is_zero) -> list:
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


class ExtensionField(Field):
    """The quotient ring ``base[x] / (modulus)`` for a monic irreducible modulus.

    ``modulus`` is a sequence of base-field raw values or elements, lowest
    degree first, including the leading 1.
    """

    def __init__(self, base: Field, modulus: Sequence, *, check: bool = True, name: str = "x"):
        coeffs = tuple(base(c).raw if not isinstance(c, FieldElement) else base.lift(c).raw
                       for c in modulus)
        if len(coeffs) < 3:
            raise ValueError("extension degree must be at least 2")
        if coeffs[-1] != base.raw_one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = coeffs
        self.degree = len(coeffs) - 1
        self.order = base.order ** self.degree
        self.characteristic = base.characteristic
        self.name = name
        self.raw_zero = (base.raw_zero,) * self.degree
        self.raw_one = (base.raw_one,) + (base.raw_zero,) * (self.degree - 1)
        self._hash = hash(("ext", base, coeffs))
        # x^d = -sum(m_k x^k): keep the nonzero negated low coefficients
        self._reduction = [(k, base.neg(c)) for k, c in enumerate(coeffs[:-1])
                           if not base.is_zero(c)]
        self._prime_base = isinstance(base, PrimeField)
        if self._prime_base:
            self._badd, self._bmul = base.add, base.mul
        else:
            self._badd = lru_cache(maxsize=None)(base.add)
            self._bmul = lru_cache(maxsize=None)(base.mul)
        self._trace_monomials = None
        if check:
            from .poly import Polynomial, is_irreducible

            if not is_irreducible(Polynomial(base, [FieldElement(base, c) for c in coeffs])):
                raise ValueError(f"modulus {list(coeffs)} is reducible over {base}")

    def __eq__(self, other):
        return (self is other) or (
            isinstance(other, ExtensionField)
            and other._hash == self._hash
            and other.modulus == self.modulus
            and other.base == self.base
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({_format_raw_poly(self.base, self.modulus, self.name)})"

    @property
    def gen(self) -> "FieldElement":
        """The residue class of ``x``."""
        b = self.base
        return FieldElement(self, (b.raw_zero, b.raw_one) + (b.raw_zero,) * (self.degree - 2))

    # -- raw arithmetic -------------------------------------------------

    def add(self, a, b):
        f = self._badd
        return tuple(f(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        f = self.base.sub
        return tuple(f(x, y) for x, y in zip(a, b))

    def neg(self, a):
        f = self.base.neg
        return tuple(f(x) for x in a)

    def is_zero(self, a) -> bool:
        return a == self.raw_zero

    def mul(self, a, b):
        d = self.degree
        if self._prime_base:
            p = self.base.p
            prod = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            for k in range(2 * d - 2, d - 1, -1):
                c = prod[k] % p
                if c:
                    off = k - d
                    for t, r in self._reduction:
                        prod[off + t] += c * r
            return tuple(c % p for c in prod[:d])
        zero = self.base.raw_zero
        add, mul = self._badd, self._bmul
        prod = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai != zero:
                for j, bj in enumerate(b):
                    if bj != zero:
                        prod[i + j] = add(prod[i + j], mul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c != zero:
                off = k - d
                for t, r in self._reduction:
                    prod[off + t] = add(prod[off + t], mul(c, r))
        return tuple(prod[:d])

    def scale(self, c, a):
        """Multiply raw ``a`` by raw base-field scalar ``c``."""
        f = self._bmul
        return tuple(f(c, x) for x in a)

    def inv(self, a):
        """Inverse by the extended Euclidean algorithm on ``a`` and the modulus."""
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero")
        base = self.base
        # invariants: r0 = s0 * a (mod modulus), r1 = s1 * a (mod modulus)
        r0, r1 = list(self.modulus), _strip(list(a), base.is_zero)
        s0, s1 = [], [base.raw_one]
        while len(r1) > 1:
            q, r = _raw_divmod(base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _raw_sub(base, s0, _raw_mul(base, q, s1))
        # r1 is a nonzero constant
        c = base.inv(r1[0])
        out = [base.mul(c, x) for x in s1]
        out += [base.raw_zero] * (self.degree - len(out))
        return tuple(out)

    # -- structure -------------------------------------------------------

    def embed(self, elem: "FieldElement") -> "FieldElement":
        """Map an element of the immediate base field into this field."""
        if elem.field != self.base:
            raise FieldMismatchError(f"{elem.field} is not the base of {self}")
        return FieldElement(self, (elem.raw,) + (self.base.raw_zero,) * (self.degree - 1))

    def lift(self, elem):
        if elem.field == self:
            return elem
        return self.embed(self.base.lift(elem))

    def in_base(self, elem: "FieldElement") -> bool:
        z = self.base.raw_zero
        return all(c == z for c in elem.raw[1:])

    def project(self, elem: "FieldElement") -> "FieldElement":
        """Inverse of :meth:`embed`; fails if ``elem`` is outside the base field."""
        if elem.field != self:
            raise FieldMismatchError(f"{elem!r} is not in {self}")
        if not self.in_base(elem):
            raise ValueError(f"{elem!r} does not lie in {self.base}")
        return FieldElement(self.base, elem.raw[0])

    def coordinates(self, elem: "FieldElement") -> list["FieldElement"]:
        """Coefficients of ``elem`` in the power basis of :attr:`gen` over the base."""
        if elem.field != self:
            raise FieldMismatchError(f"{elem!r} is not in {self}")
        return [FieldElement(self.base, c) for c in elem.raw]

    def from_coordinates(self, coords: Sequence["FieldElement"]) -> "FieldElement":
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, tuple(self.base.lift(c).raw for c in coords))

    def frobenius(self, raw, i: int = 1):
        """``raw ** (q ** i)`` by repeated q-th powering, q the base order."""
        q = self.base.order
        for _ in range(i % self.degree):
            raw = self.pow(raw, q)
        return raw

    def conjugates(self, raw) -> list:
        out = [raw]
        q = self.base.order
        for _ in range(self.degree - 1):
            out.append(self.pow(out[-1], q))
        return out

    def trace_by_conjugates(self, raw):
        """Raw sum of the ``degree`` conjugates; still a raw value of ``self``."""
        acc = self.raw_zero
        for c in self.conjugates(raw):
            acc = self.add(acc, c)
        return acc

    def trace(self, raw):
        """Raw base-field trace of ``raw``.

        The trace is linear over the base, so it is the dot product of the
        coordinates with the traces of the monomials 1, x, ..., x^(d-1); those
        are computed once from the conjugate sum.
        """
        if self._trace_monomials is None:
            ts = []
            mono = self.raw_one
            x = self.gen.raw
            for _ in range(self.degree):
                t = self.trace_by_conjugates(mono)
                if any(c != self.base.raw_zero for c in t[1:]):
                    raise AssertionError(f"trace left the base field in {self}")
                ts.append(t[0])
                mono = self.mul(mono, x)
            self._trace_monomials = ts
        base = self.base
        acc = base.raw_zero
        for c, t in zip(raw, self._trace_monomials):
            acc = base.add(acc, base.mul(c, t))
        return acc

    # -- conversion ------------------------------------------------------

    def raw_from_int(self, k: int):
        return (self.base.raw_from_int(k),) + (self.base.raw_zero,) * (self.degree - 1)

    def raw_from_nested(self, value):
        if isinstance(value, (str, bytes)) or not isinstance(value, Sequence):
            raise TypeError(f"expected a coefficient list for an element of {self}, got {value!r}")
        if len(value) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients for {self}, got {len(value)}")
        return tuple(self.base.raw_from_nested(v) for v in value)

    def to_nested(self, raw):
        return [self.base.to_nested(c) for c in raw]

    def raw_elements(self):
        # lowest coefficient varies fastest
        for combo in itertools.product(list(self.base.raw_elements()), repeat=self.degree):
            yield tuple(reversed(combo))

    def raw_random(self, rng):
        return tuple(self.base.raw_random(rng) for _ in range(self.degree))


# raw polynomial helpers over a field, coefficient lists lowest degree first,
# stripped of trailing zeros

def _raw_sub(F: Field, a: list, b: list) -> list:
    n = max(len(a), len(b))
    z = F.raw_zero
    out = [F.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]
    return _strip(out, F.is_zero)


def _raw_mul(F: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [F.raw_zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not F.is_zero(x):
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _strip(out, F.is_zero)


def _raw_divmod(F: Field, a: list, b: list) -> tuple[list, list]:
    r = list(a)
    lead_inv = F.inv(b[-1])
    q = [F.raw_zero] * max(len(a) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
        r.pop()
        _strip(r, F.is_zero)
    return _strip(q, F.is_zero), r


def _format_raw_poly(F: Field, coeffs, var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if F.is_zero(c):
            continue
        cs = _format_raw(F, c)
        if k == 0:
            terms.append(cs)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == F.raw_one else f"{cs}*{mono}")
    return " + ".join(terms) or "0"


def _format_raw(F: Field, raw) -> str:
    if isinstance(F, PrimeField):
        return str(raw)
    text = _format_raw_poly(F.base, raw, F.name)
    return text if " + " not in text else f"({text})"


Scalar = Union["FieldElement", int]


class FieldElement:
    """An immutable element of a finite field."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other: Scalar) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, self.field.raw_from_int(other))
        return NotImplemented

    def __add__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.sub(self.raw, other.raw))

    def __rsub__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.sub(other.raw, self.raw))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.raw))

    def __mul__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.mul(self.raw, other.raw))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.mul(self.raw, self.field.inv(other.raw)))

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.raw, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.raw))

    def scale(self, c: "FieldElement") -> "FieldElement":
        """Multiply by an element of the immediate base field (cheap path)."""
        F = self.field
        if not isinstance(F, ExtensionField):
            return self * c
        if c.field != F.base:
            raise FieldMismatchError(f"{c!r} is not in the base of {F}")
        return FieldElement(F, F.scale(c.raw, self.raw))

    def frobenius(self, i: int = 1) -> "FieldElement":
        F = self.field
        if not isinstance(F, ExtensionField):
            return self
        return FieldElement(F, F.frobenius(self.raw, i))

    def trace(self) -> "FieldElement":
        """Trace down to the immediate base field."""
        F = self.field
        if not isinstance(F, ExtensionField):
            return self
        return FieldElement(F.base, F.trace(self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def __bool__(self) -> bool:
        return not self.field.is_zero(self.raw)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.raw == self.field.raw_from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.raw == other.raw and (self.field is other.field or self.field == other.field)

    def __hash__(self) -> int:
        return hash(self.raw)

    def to_nested(self):
        return self.field.to_nested(self.raw)

    def __repr__(self) -> str:
        if isinstance(self.field, ExtensionField):
            return _format_raw_poly(self.field.base, self.raw, self.field.name)
        return str(self.raw)


def smallest_irreducible(base: Field, degree: int) -> tuple:
    """Lexicographically smallest monic irreducible of ``degree`` over ``base``.

    Candidates are ordered by their non-leading coefficients read from the
    highest degree down, each compared by element index; the result is the
    raw coefficient tuple, lowest degree first.
    """
    from .poly import Polynomial, is_irreducible

    elems = list(base.raw_elements())
    for combo in itertools.product(elems, repeat=degree):
        coeffs = tuple(reversed(combo)) + (base.raw_one,)
        if base.is_zero(coeffs[0]):
            continue
        if is_irreducible(Polynomial(base, [FieldElement(base, c) for c in coeffs])):
            return coeffs
    raise AssertionError(f"no irreducible of degree {degree} over {base}")


@lru_cache(maxsize=None)
def GF(p: int, m: int = 1) -> Field:
    """The field with ``p**m`` elements; ``m > 1`` uses the smallest irreducible modulus."""
    F = PrimeField(p)
    if m == 1:
        return F
    return ExtensionField(F, smallest_irreducible(F, m), name="t")
