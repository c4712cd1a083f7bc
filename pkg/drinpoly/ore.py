"""
Ore polynomials K{tau} with the commutation rule tau * a = a^q * tau
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .fields import FieldTower, KElement
from .polynomials import ZERO_DEGREE
from .types import DivisionByZero, TowerMismatch, ZeroPolynomial


class OrePoly:
    """u_0 + u_1 tau + ... + u_n tau^n, coefficients in K, ascending tau-degree"""

    __slots__ = ("coeffs", "tower")

    def __init__(self, tower: FieldTower, coeffs: Iterable[KElement] = ()):
        cs = list(coeffs)
        while cs and tower.is_zero(cs[-1]):
            cs.pop()
        self.tower = tower
        self.coeffs: tuple[KElement, ...] = tuple(cs)

    @classmethod
    def zero(cls, tower: FieldTower) -> OrePoly:
        return cls(tower)

    @classmethod
    def one(cls, tower: FieldTower) -> OrePoly:
        return cls(tower, [tower.one()])

    @classmethod
    def constant(cls, tower: FieldTower, c: KElement) -> OrePoly:
        return cls(tower, [c])

    @classmethod
    def monomial(cls, tower: FieldTower, c: KElement, k: int) -> OrePoly:
        """c * tau^k"""
        return cls(tower, [*([tower.zero()] * k), c])

    @classmethod
    def tau(cls, tower: FieldTower, k: int = 1) -> OrePoly:
        return cls.monomial(tower, tower.one(), k)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> KElement:
        return self.coeffs[-1] if self.coeffs else self.tower.zero()

    def coefficient(self, k: int) -> KElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.tower.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __iter__(self) -> Iterator[KElement]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.tower is other.tower or self.tower == other.tower)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "OrePoly(0)"
        fmt = self.tower.format
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.tower.is_zero(c):
                continue
            mono = "" if k == 0 else ("tau" if k == 1 else f"tau^{k}")
            terms.append(f"({fmt(c)})*{mono}" if mono else f"({fmt(c)})")
        return f"OrePoly({' + '.join(terms)})"

    def _check(self, other: OrePoly) -> None:
        if self.tower is not other.tower and self.tower != other.tower:
            raise TowerMismatch("Ore polynomials live over different towers")

    def __add__(self, other: OrePoly) -> OrePoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = self.tower.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return OrePoly(self.tower, out)

    def __neg__(self) -> OrePoly:
        neg = self.tower.neg
        return OrePoly(self.tower, [neg(c) for c in self.coeffs])

    def __sub__(self, other: OrePoly) -> OrePoly:
        return self + (-other)

    def __mul__(self, other: OrePoly) -> OrePoly:
        return ore_mul(self, other)

    def __pow__(self, k: int) -> OrePoly:
        return ore_pow(self, k)

    def __divmod__(self, other: OrePoly) -> tuple[OrePoly, OrePoly]:
        return ore_divmod_right(self, other)

    def scale_left(self, c: KElement) -> OrePoly:
        """c * self"""
        mul = self.tower.mul
        return OrePoly(self.tower, [mul(c, x) for x in self.coeffs])

    def twist(self, s: int = 1) -> OrePoly:
        """Raise every coefficient to the power q^s"""
        return OrePoly(self.tower, self.tower.frobenius_batch(self.coeffs, s))

    def __call__(self, a: KElement) -> KElement:
        """Evaluate as the F_q-linear map a -> sum u_i a^{q^i}"""
        tower = self.tower
        acc = tower.zero()
        power = a
        for i, c in enumerate(self.coeffs):
            if i:
                power = tower.frobenius(power, 1)
            acc = tower.add(acc, tower.mul(c, power))
        return acc


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Schoolbook product with (f_i tau^i)(g_j tau^j) = f_i g_j^{q^i} tau^{i+j}"""
    f._check(g)
    tower = f.tower
    if f.is_zero() or g.is_zero():
        return OrePoly(tower)
    add, mul, is_zero = tower.add, tower.mul, tower.is_zero
    out = [tower.zero()] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if is_zero(fi):
            continue
        twisted = tower.frobenius_batch(g.coeffs, i)
        for j, gj in enumerate(twisted):
            out[i + j] = add(out[i + j], mul(fi, gj))
    return OrePoly(tower, out)


def ore_divmod_right(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Return (Q, R) with f = Q * g + R and deg R < deg g"""
    f._check(g)
    if g.is_zero():
        raise DivisionByZero("Ore division by zero")
    tower = f.tower
    n = g.degree
    rem = list(f.coeffs)
    if len(rem) - 1 < n:
        return OrePoly(tower), f
    quot = [tower.zero()] * (len(rem) - n)
    # twisted copies of g, one per quotient degree
    twists: dict[int, list[KElement]] = {}
    lead_invs: dict[int, KElement] = {}
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if tower.is_zero(c):
            continue
        shift = k - n
        if shift not in twists:
            twists[shift] = tower.frobenius_batch(g.coeffs, shift)
            lead_invs[shift] = tower.inv(twists[shift][-1])
        c = tower.mul(c, lead_invs[shift])
        quot[shift] = c
        for j, gj in enumerate(twists[shift]):
            rem[shift + j] = tower.sub(rem[shift + j], tower.mul(c, gj))
    return OrePoly(tower, quot), OrePoly(tower, rem[:n])


def ore_pow(f: OrePoly, k: int) -> OrePoly:
    if k < 0:
        raise ValueError("negative Ore power")
    result = OrePoly.one(f.tower)
    base = f
    while k > 0:
        if k & 1:
            result = ore_mul(result, base)
        k >>= 1
        if k:
            base = ore_mul(base, base)
    return result


def height(f: OrePoly) -> int:
    """Index of the lowest nonzero coefficient"""
    if f.is_zero():
        raise ZeroPolynomial("the zero Ore polynomial has no height")
    tower = f.tower
    return next(i for i, c in enumerate(f.coeffs) if not tower.is_zero(c))

