"""
Dense univariate polynomials over any coefficient field of the tower
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Sequence
from typing import Any, Protocol

import galois

from .types import DivisionByZero, DuplicateAbscissa, ZeroPolynomial

# Degree of the zero polynomial
ZERO_DEGREE = -1


class Ring(Protocol):
    """Operations a coefficient ring must provide.

    Elements are plain values (ints, tuples, Poly); the ring object carries the arithmetic.
    """

    def zero(self) -> Any: ...

    def one(self) -> Any: ...

    def add(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...

    def neg(self, a: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...


class Field(Ring, Protocol):
    """A finite field: a ring with inverses, a known order and enumerable elements"""

    @property
    def order(self) -> int: ...

    def inv(self, a: Any) -> Any: ...

    def from_int(self, n: int) -> Any: ...

    def random_element(self, rng: random.Random) -> Any: ...

    def elements(self) -> Iterator[Any]: ...

    def format(self, a: Any) -> str: ...


class Poly:
    """Polynomial with coefficients in ``ring``, stored in ascending degree order.

    The coefficient tuple never has trailing zeros, so equality is coefficient-wise.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, ring: Any, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.ring = ring
        self.coeffs: tuple[Any, ...] = tuple(cs)

    # constructors

    @classmethod
    def zero(cls, ring: Any) -> Poly:
        return cls(ring)

    @classmethod
    def one(cls, ring: Any) -> Poly:
        return cls(ring, [ring.one()])

    @classmethod
    def constant(cls, ring: Any, c: Any) -> Poly:
        return cls(ring, [c])

    @classmethod
    def monomial(cls, ring: Any, c: Any, k: int) -> Poly:
        return cls(ring, [*([ring.zero()] * k), c])

    @classmethod
    def variable(cls, ring: Any) -> Poly:
        return cls(ring, [ring.zero(), ring.one()])

    @classmethod
    def from_roots(cls, ring: Any, roots: Iterable[Any]) -> Poly:
        """Monic polynomial prod (T - a) over the given roots"""
        result = cls.one(ring)
        for a in roots:
            result = result * cls(ring, [ring.neg(a), ring.one()])
        return result

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Any:
        if not self.coeffs:
            return self.ring.zero()
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        fmt = getattr(self.ring, "format", repr)
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.ring.is_zero(c):
                continue
            terms.append(f"({fmt(c)})*T^{k}" if k else f"({fmt(c)})")
        return " + ".join(terms)

    # arithmetic

    def _coerce(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly(self.ring, [other])

    def __add__(self, other: Any) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ring.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        neg = self.ring.neg
        return Poly(self.ring, [neg(c) for c in self.coeffs])

    def __sub__(self, other: Any) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.ring)
        ring = self.ring
        add, mul, is_zero = ring.add, ring.mul, ring.is_zero
        out = [ring.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(ring, out)

    def __rmul__(self, other: Any) -> Poly:
        return self.scale(other)

    def scale(self, c: Any) -> Poly:
        mul = self.ring.mul
        return Poly(self.ring, [mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by T^k"""
        if not self.coeffs:
            return self
        return Poly(self.ring, [self.ring.zero()] * k + list(self.coeffs))

    def __pow__(self, n: int) -> Poly:
        result = Poly.one(self.ring)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ring = self.ring
        lead_inv = ring.inv(other.leading)
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(ring), self
        quot = [ring.zero()] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if ring.is_zero(c):
                continue
            c = ring.mul(c, lead_inv)
            quot[k - db] = c
            for i, bi in enumerate(other.coeffs):
                rem[k - db + i] = ring.sub(rem[k - db + i], ring.mul(c, bi))
        return Poly(ring, quot), Poly(ring, rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        return self.scale(self.ring.inv(self.leading))

    def __call__(self, x: Any) -> Any:
        """Evaluate at ``x`` by Horner's rule"""
        ring = self.ring
        acc = ring.zero()
        for c in reversed(self.coeffs):
            acc = ring.add(ring.mul(acc, x), c)
        return acc

    def map_coeffs(self, fn: Any, ring: Any | None = None) -> Poly:
        """Apply ``fn`` to every coefficient, optionally landing in another ring"""
        return Poly(ring if ring is not None else self.ring, [fn(c) for c in self.coeffs])

    def substitute_power(self, s: int) -> Poly:
        """P(T) -> P(T^s)"""
        if s == 1 or not self.coeffs:
            return self
        out = [self.ring.zero()] * (s * self.degree + 1)
        for k, c in enumerate(self.coeffs):
            out[s * k] = c
        return Poly(self.ring, out)

    def is_periodic(self, s: int) -> bool:
        """True when every nonzero monomial T^k has s | k"""
        return all(self.ring.is_zero(c) for k, c in enumerate(self.coeffs) if k % s)

    def compress_power(self, s: int) -> Poly:
        """Inverse of substitute_power; assumes is_periodic(s)"""
        if s == 1:
            return self
        return Poly(self.ring, self.coeffs[::s])


class PolyRing:
    """The ring F[T], exposing the Ring protocol over Poly values"""

    def __init__(self, field: Any):
        self.field = field

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and self.field == other.field

    def __hash__(self) -> int:
        return hash(("poly", self.field))

    def zero(self) -> Poly:
        return Poly(self.field)

    def one(self) -> Poly:
        return Poly.one(self.field)

    def variable(self) -> Poly:
        return Poly.variable(self.field)

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def sub(self, a: Poly, b: Poly) -> Poly:
        return a - b

    def neg(self, a: Poly) -> Poly:
        return -a

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero()

    def format(self, a: Poly) -> str:
        return repr(a)


def coeffwise_frobenius(poly: Poly, s: int) -> Poly:
    """Raise every coefficient of a K[T] polynomial to the power q^s.

    Coefficient rings without a Frobenius (F_q itself) are fixed pointwise.
    """
    if not poly.coeffs:
        return poly
    batch = getattr(poly.ring, "frobenius_batch", None)
    if batch is None:
        return poly
    return Poly(poly.ring, batch(poly.coeffs, s))


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0"""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with g = s*a + t*b and g monic (or zero)"""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Poly.one(ring), Poly(ring)
    t0, t1 = Poly(ring), Poly.one(ring)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = ring.inv(r0.leading)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def pow_mod(base: Poly, n: int, modulus: Poly) -> Poly:
    result = Poly.one(base.ring) % modulus
    base = base % modulus
    while n > 0:
        if n & 1:
            result = (result * base) % modulus
        n >>= 1
        if n:
            base = (base * base) % modulus
    return result


def interpolate(ring: Any, points: Sequence[tuple[Any, Any]]) -> Poly:
    """Lagrange interpolation: the unique polynomial of degree < len(points) through them"""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be pairwise distinct", {"count": len(xs)})
    if not points:
        return Poly(ring)
    master = Poly.from_roots(ring, xs)
    result = Poly(ring)
    for x, y in points:
        if ring.is_zero(y):
            continue
        basis = master // Poly(ring, [ring.neg(x), ring.one()])
        denom = basis(x)
        result = result + basis.scale(ring.mul(y, ring.inv(denom)))
    return result


def is_irreducible(poly: Poly) -> bool:
    """Rabin's test over a finite coefficient field of known order"""
    n = poly.degree
    if n < 1:
        return False
    if n == 1:
        return True
    ring = poly.ring
    f = poly.monic()
    q = ring.order
    x = Poly.variable(ring)
    primes, _ = galois.factors(n)
    # x^{q^k} mod f for k = 1..n
    powers = [x % f]
    for _ in range(n):
        powers.append(pow_mod(powers[-1], q, f))
    if powers[n] != x % f:
        return False
    for ell in primes:
        h = powers[n // ell] - x
        if gcd(h, f).degree > 0:
            return False
    return True


def find_irreducible(field: Any, degree: int, rng: random.Random) -> Poly:
    """Random monic irreducible polynomial of the given degree (Las Vegas)"""
    while True:
        coeffs = [*(field.random_element(rng) for _ in range(degree)), field.one()]
        candidate = Poly(field, coeffs)
        if is_irreducible(candidate):
            return candidate
