"""
Finite field tower F_p < F_q = F_p[y]/f(y) < K = F_q[x]/Q(x) with precomputed Frobenius data
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Sequence
from typing import Any

import galois
import numpy as np

from .polynomials import Poly, find_irreducible, is_irreducible, xgcd
from .types import CoefficientNotRational, NonMonicModulus, NotPrime, ReducibleModulus

# Element type of K: d coordinates over F_q in the basis (1, x, ..., x^{d-1})
KElement = tuple[Any, ...]

# Above this order F_q arithmetic goes through galois scalars instead of lookup tables
TABLE_LIMIT = 1024


def _digits(n: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        n, r = divmod(n, p)
        out.append(r)
    return out


class FiniteField:
    """F_q with q = p^e, elements encoded as ints in [0, q).

    The encoding is the one galois uses: sum c_i y^i  <->  sum c_i p^i.
    """

    def __init__(self, p: int, modulus: Poly | None = None):
        if p < 2 or not galois.is_prime(p):
            raise NotPrime(f"{p} is not a prime", {"p": p})
        self.p = p
        self.modulus = modulus
        if modulus is None:
            self.e = 1
            self.gf = galois.GF(p)
        else:
            if modulus.degree < 1 or not modulus.is_monic():
                raise NonMonicModulus("F_q modulus must be monic of degree >= 1", {"modulus": repr(modulus)})
            self.e = modulus.degree
            prime = galois.GF(p)
            g = galois.Poly(list(reversed(modulus.coeffs)), field=prime)
            if not g.is_irreducible():
                raise ReducibleModulus("F_q modulus is reducible over F_p", {"modulus": repr(modulus)})
            if self.e == 1:
                self.gf = prime
            else:
                self.gf = galois.GF(p**self.e, irreducible_poly=g)
        self._order = p**self.e
        self._tables = self.e > 1 and self._order <= TABLE_LIMIT
        if self._tables:
            elems = self.gf(np.arange(self._order))
            self._add = (elems[:, None] + elems[None, :]).view(np.ndarray).tolist()
            self._mul = (elems[:, None] * elems[None, :]).view(np.ndarray).tolist()
            self._neg = (-elems).view(np.ndarray).tolist()
            self._inv = [0, *(self.gf(1) / elems[1:]).view(np.ndarray).tolist()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.p == other.p and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(("F", self.p, self._key()))

    def _key(self) -> tuple[int, ...]:
        return () if self.modulus is None else tuple(self.modulus.coeffs)

    def __repr__(self) -> str:
        return f"FiniteField(q={self._order})"

    @property
    def order(self) -> int:
        return self._order

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def prime_field(self) -> FiniteField:
        return self if self.modulus is None else FiniteField(self.p)

    # Ring protocol

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def is_zero(self, a: int) -> bool:
        return a == 0

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._tables:
            return self._add[a][b]
        return int(self.gf(a) + self.gf(b))

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self._tables:
            return self._neg[a]
        return int(-self.gf(a))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self._tables:
            return self._mul[a][b]
        return int(self.gf(a) * self.gf(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._tables:
            return self._inv[a]
        return int(self.gf(1) / self.gf(a))

    def power(self, a: int, n: int) -> int:
        if self.e == 1:
            return pow(a, n, self.p)
        return int(self.gf(a) ** n)

    # Field protocol

    def from_int(self, n: int) -> int:
        return n % self.p

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self._order)

    def elements(self) -> Iterator[int]:
        return iter(range(self._order))

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        """Element sum c_i y^i, reduced modulo f(y)"""
        prime = self.prime_field
        poly = Poly(prime, [c % self.p for c in coeffs])
        if self.modulus is not None:
            poly = poly % Poly(prime, self.modulus.coeffs)
        return sum(c * self.p**i for i, c in enumerate(poly.coeffs))

    def coefficients(self, a: int) -> list[int]:
        """Coordinates of ``a`` over F_p in the basis (1, y, ..., y^{e-1})"""
        return _digits(a, self.p, self.e)

    def format(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        terms = []
        for k, c in reversed(list(enumerate(self.coefficients(a)))):
            if c == 0:
                continue
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def array(self, values: Any) -> Any:
        """galois FieldArray over F_q from ints or nested lists of ints"""
        return self.gf(np.asarray(values, dtype=np.int64))


class ExtensionField:
    """Simple extension base[z]/R(z); elements are tuples of ``degree`` base elements"""

    variable_name = "z"

    def __init__(self, base: Any, modulus: Poly, check: bool = True):
        if modulus.degree < 1 or not modulus.is_monic():
            raise NonMonicModulus("extension modulus must be monic of degree >= 1", {"modulus": repr(modulus)})
        if check and not is_irreducible(modulus):
            raise ReducibleModulus("extension modulus is reducible", {"modulus": repr(modulus)})
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self._order = base.order**self.degree
        self._prime = base.p if isinstance(base, FiniteField) and base.e == 1 else None
        # x^k mod R for k in [n, 2n - 2]
        n = self.degree
        self._reductions: list[KElement] = []
        shifted = Poly.monomial(base, base.one(), n)
        for _ in range(max(n - 1, 0)):
            r = shifted % modulus
            self._reductions.append(self._pad(r.coeffs))
            shifted = shifted.shift(1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtensionField):
            return NotImplemented
        return self.base == other.base and self.modulus.coeffs == other.modulus.coeffs

    def __hash__(self) -> int:
        return hash(("E", self.base, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self._order}, degree={self.degree})"

    def _pad(self, coeffs: Sequence[Any]) -> KElement:
        zero = self.base.zero()
        return tuple(coeffs) + (zero,) * (self.degree - len(coeffs))

    @property
    def order(self) -> int:
        return self._order

    @property
    def characteristic(self) -> int:
        return int(self.base.characteristic)

    # Ring protocol

    def zero(self) -> KElement:
        return (self.base.zero(),) * self.degree

    def one(self) -> KElement:
        return self.embed(self.base.one())

    def gen(self) -> KElement:
        if self.degree == 1:
            return (self.base.neg(self.modulus.coeffs[0]),)
        return self._pad([self.base.zero(), self.base.one()])

    def embed(self, c: Any) -> KElement:
        return (c,) + (self.base.zero(),) * (self.degree - 1)

    def is_zero(self, a: KElement) -> bool:
        z = self.base.zero()
        return all(c == z for c in a)

    def in_base(self, a: KElement) -> bool:
        z = self.base.zero()
        return all(c == z for c in a[1:])

    def add(self, a: KElement, b: KElement) -> KElement:
        if self._prime is not None:
            p = self._prime
            return tuple((x + y) % p for x, y in zip(a, b, strict=True))
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b, strict=True))

    def sub(self, a: KElement, b: KElement) -> KElement:
        if self._prime is not None:
            p = self._prime
            return tuple((x - y) % p for x, y in zip(a, b, strict=True))
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b, strict=True))

    def neg(self, a: KElement) -> KElement:
        if self._prime is not None:
            p = self._prime
            return tuple(-x % p for x in a)
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def mul(self, a: KElement, b: KElement) -> KElement:
        n = self.degree
        if self._prime is not None:
            p = self._prime
            prod = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            out = prod[:n]
            for k in range(2 * n - 2, n - 1, -1):
                c = prod[k] % p
                if c:
                    red = self._reductions[k - n]
                    for i in range(n):
                        out[i] += c * red[i]
            return tuple(v % p for v in out)
        base = self.base
        add, mul = base.add, base.mul
        zero = base.zero()
        prod2 = [zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                prod2[i + j] = add(prod2[i + j], mul(ai, bj))
        res = list(prod2[:n])
        for k in range(2 * n - 2, n - 1, -1):
            c = prod2[k]
            if c == zero:
                continue
            red = self._reductions[k - n]
            for i in range(n):
                res[i] = add(res[i], mul(c, red[i]))
        return tuple(res)

    def scalar_mul(self, c: Any, a: KElement) -> KElement:
        mul = self.base.mul
        return tuple(mul(c, x) for x in a)

    def inv(self, a: KElement) -> KElement:
        if self.is_zero(a):
            raise ZeroDivisionError("0 has no inverse")
        _, s, _ = xgcd(Poly(self.base, a), self.modulus)
        return self._pad(s.coeffs)

    def power(self, a: KElement, n: int) -> KElement:
        result = self.one()
        while n > 0:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    # Field protocol

    def from_int(self, n: int) -> KElement:
        return self.embed(self.base.from_int(n))

    def from_poly(self, poly: Poly) -> KElement:
        """Reduce a polynomial over the base field modulo the defining modulus"""
        return self._pad((poly % self.modulus).coeffs)

    def random_element(self, rng: random.Random) -> KElement:
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def elements(self) -> Iterator[KElement]:
        return itertools.product(list(self.base.elements()), repeat=self.degree)

    def format(self, a: KElement) -> str:
        var = self.variable_name
        terms = []
        for k in range(self.degree - 1, -1, -1):
            c = a[k]
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            if " " in cs and k:
                cs = f"({cs})"
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                terms.append(cs)
            elif c == self.base.one():
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"


class FieldTower(ExtensionField):
    """K = F_q[x]/Q(x) together with the Frobenius x -> x^q as a d x d matrix over F_q"""

    variable_name = "x"

    def __init__(self, fq: FiniteField, k_modulus: Poly):
        if k_modulus.degree < 1 or not k_modulus.is_monic():
            raise NonMonicModulus("K modulus must be monic of degree >= 1", {"modulus": repr(k_modulus)})
        g = galois.Poly(list(reversed(k_modulus.coeffs)), field=fq.gf)
        if not g.is_irreducible():
            raise ReducibleModulus("K modulus is reducible over F_q", {"modulus": repr(k_modulus)})
        super().__init__(fq, k_modulus, check=False)
        self.fq: FiniteField = fq
        self.p = fq.p
        self.e = fq.e
        self.q = fq.order
        self.d = self.degree

        # column i holds x^{iq} mod Q
        xq = self.power(self.gen(), self.q)
        columns = [self.one()]
        for _ in range(1, self.d):
            columns.append(self.mul(columns[-1], xq))
        self.frobenius_matrix = fq.array(columns).T
        self._frob_powers = [fq.gf.Identity(self.d)]
        for _ in range(1, self.d):
            self._frob_powers.append(self.frobenius_matrix @ self._frob_powers[-1])

    @property
    def fq_modulus(self) -> Poly | None:
        return self.fq.modulus

    @property
    def k_modulus(self) -> Poly:
        return self.modulus

    def frobenius_power_matrix(self, s: int) -> Any:
        """Matrix of a -> a^{q^s}"""
        return self._frob_powers[s % self.d]

    def frobenius(self, a: KElement, s: int = 1) -> KElement:
        s %= self.d
        if s == 0:
            return a
        vec = self._frob_powers[s] @ self.fq.array(a)
        return tuple(vec.view(np.ndarray).tolist())

    def frobenius_batch(self, elems: Sequence[KElement], s: int = 1) -> list[KElement]:
        """Apply a -> a^{q^s} to many elements with a single matrix product"""
        s %= self.d
        if s == 0 or not elems:
            return list(elems)
        stacked = self.fq.array(elems) @ self._frob_powers[s].T
        return [tuple(row) for row in stacked.view(np.ndarray).tolist()]

    def multiplication_matrix(self, a: KElement) -> Any:
        """d x d matrix over F_q of x -> a*x"""
        columns = []
        basis = self.one()
        for _ in range(self.d):
            columns.append(self.mul(a, basis))
            basis = self.mul(basis, self.gen())
        return self.fq.array(columns).T

    def to_fq(self, a: KElement) -> int:
        if not self.in_base(a):
            raise CoefficientNotRational("element of K is not in F_q", {"element": self.format(a)})
        return a[0]

    def norm_to_fq(self, a: KElement) -> int:
        """N_{K/F_q}(a) = a * a^q * ... * a^{q^{d-1}}"""
        result = self.one()
        for conj in self.conjugates(a):
            result = self.mul(result, conj)
        return self.to_fq(result)

    def conjugates(self, a: KElement) -> list[KElement]:
        return [a, *(self.frobenius(a, s) for s in range(1, self.d))]

    def min_poly_over_fq(self, a: KElement) -> Poly:
        """Monic minimal polynomial of ``a`` over F_q, from its Frobenius orbit"""
        orbit = [a]
        conj = self.frobenius(a, 1)
        while conj != a:
            orbit.append(conj)
            conj = self.frobenius(conj, 1)
        over_k = Poly.from_roots(self, orbit)
        return over_k.map_coeffs(self.to_fq, self.fq)


def _as_poly(field: Any, coeffs: Poly | Sequence[Any] | None) -> Poly | None:
    if coeffs is None or isinstance(coeffs, Poly):
        return coeffs
    return Poly(field, list(coeffs))


def build_tower(
    p: int,
    fq_modulus: Poly | Sequence[int] | None,
    k_modulus: Poly | Sequence[int],
) -> FieldTower:
    """Build F_p < F_q < K from ascending coefficient lists (or Poly values)"""
    if p < 2 or not galois.is_prime(p):
        raise NotPrime(f"{p} is not a prime", {"p": p})
    prime = FiniteField(p)
    f = _as_poly(prime, fq_modulus)
    if f is not None and len(f.coeffs) and f.coeffs[-1] != 1:
        raise NonMonicModulus("F_q modulus must be monic", {"modulus": repr(f)})
    fq = FiniteField(p, f) if f is not None and f.degree > 1 else prime
    if f is not None and f.degree < 1:
        raise NonMonicModulus("F_q modulus must have degree >= 1", {"modulus": repr(f)})
    q_poly = _as_poly(fq, k_modulus)
    assert q_poly is not None
    return FieldTower(fq, q_poly)


def random_tower(p: int, e: int, d: int, seed: int = 0) -> FieldTower:
    """Deterministic tower with random irreducible moduli"""
    rng = random.Random(seed)
    prime = FiniteField(p)
    fq = FiniteField(p, find_irreducible(prime, e, rng)) if e > 1 else prime
    return FieldTower(fq, find_irreducible(fq, d, rng))


def frobenius(tower: FieldTower, a: KElement, s: int) -> KElement:
    return tower.frobenius(a, s)


def norm_to_fq(tower: FieldTower, a: KElement) -> int:
    return tower.norm_to_fq(a)


def min_poly_over_fq(tower: FieldTower, a: KElement) -> Poly:
    return tower.min_poly_over_fq(a)
