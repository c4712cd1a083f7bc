"""
The motive M(phi) = K{tau} as a K[T]-module through T * f = f * phi_T.

It is free of rank r on (1, tau, ..., tau^{r-1}); a morphism u acts by f -> f * u, and
its matrix in that basis gives characteristic polynomials of endomorphisms and norms
of isogenies.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from .config import get_settings
from .drinfeld import DrinfeldModule, Morphism
from .fields import FieldTower
from .linalg import PolyMatrix, Strategy, charpoly_poly_matrix, det_poly_matrix
from .ore import OrePoly, ore_divmod_right, ore_mul
from .parser import render_charpoly, render_poly
from .polynomials import Poly, PolyRing, coeffwise_frobenius
from .types import CoefficientNotRational, NotAMorphism, NotEndomorphism, ZeroIsogeny


@dataclass(frozen=True)
class CoordinateVector:
    """Coordinates (f_0, ..., f_{r-1}) over K[T] of an element of the motive"""

    entries: tuple[Poly, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Poly:
        return self.entries[i]

    def __add__(self, other: CoordinateVector) -> CoordinateVector:
        return CoordinateVector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def shift(self, m: int) -> CoordinateVector:
        """Multiply every coordinate by T^m"""
        return CoordinateVector(tuple(e.shift(m) for e in self.entries))

    def within_bounds(self, n: int) -> bool:
        """f_i = 0 when n < i, else deg f_i <= (n - i) / r, for a source of tau-degree n"""
        r = self.rank
        for i, f in enumerate(self.entries):
            if n < i:
                if not f.is_zero():
                    return False
            elif f.degree > (n - i) // r:
                return False
        return True


@dataclass(frozen=True)
class CharPoly:
    """X^r + pi_{r-1} X^{r-1} + ... + pi_0 with pi_i in F_q[T]"""

    coefficients: tuple[Poly, ...]

    def __post_init__(self) -> None:
        lead = self.coefficients[-1]
        if lead != Poly.one(lead.ring):
            raise ValueError("characteristic polynomial must be monic")

    @property
    def rank(self) -> int:
        return len(self.coefficients) - 1

    @property
    def field(self) -> Any:
        return self.coefficients[0].ring

    def coefficient(self, i: int) -> Poly:
        return self.coefficients[i]

    def trace(self) -> Poly:
        return -self.coefficients[-2]

    def constant_term(self) -> Poly:
        return self.coefficients[0]

    def degree_profile(self) -> list[int]:
        return [c.degree for c in self.coefficients]

    def as_poly(self) -> Poly:
        """The same polynomial as an element of (F_q[T])[X]"""
        return Poly(PolyRing(self.field), self.coefficients)

    def to_text(self) -> str:
        return render_charpoly(self)


@dataclass(frozen=True)
class NormIdeal:
    """Principal ideal of F_q[T], given by its monic generator"""

    generator: Poly

    def to_text(self) -> str:
        return f"({render_poly(self.generator, 'T')})"


# Algorithm building blocks


def _phi_powers(phi: DrinfeldModule) -> dict[int, OrePoly]:
    return {0: OrePoly.one(phi.tower), 1: phi.phi_T}


def _phi_power(phi: DrinfeldModule, m: int, cache: dict[int, OrePoly]) -> OrePoly:
    if m not in cache:
        half = _phi_power(phi, m // 2, cache)
        sq = ore_mul(half, half)
        cache[m] = ore_mul(sq, phi.phi_T) if m % 2 else sq
    return cache[m]


def _coordinates(phi: DrinfeldModule, f: OrePoly, cache: dict[int, OrePoly]) -> CoordinateVector:
    tower = phi.tower
    r = phi.rank
    if f.degree < r:
        return CoordinateVector(tuple(Poly(tower, [f.coefficient(i)]) for i in range(r)))
    m = max(1, f.degree // (2 * r))
    a, b = ore_divmod_right(f, _phi_power(phi, m, cache))
    return _coordinates(phi, a, cache).shift(m) + _coordinates(phi, b, cache)


def motive_coordinates(phi: DrinfeldModule, f: OrePoly) -> CoordinateVector:
    """Coordinates of f in the basis (1, tau, ..., tau^{r-1}).

    Divide-and-conquer: f = a * phi_T^m + b with deg b < r m, so coords(f) = T^m coords(a) + coords(b).
    """
    coords = _coordinates(phi, f, _phi_powers(phi))
    if get_settings().check_bounds:
        assert coords.within_bounds(f.degree), "coordinate degree bound violated"
    return coords


def motive_tau_action(phi: DrinfeldModule, v: CoordinateVector) -> CoordinateVector:
    """Coordinates of tau * f from those of f.

    f'_0 = ((T - g_0) / g_r) f_{r-1}^tau and f'_i = f_{i-1}^tau - (g_i / g_r) f_{r-1}^tau.
    """
    tower = phi.tower
    r = phi.rank
    g = phi.g
    inv = tower.inv(phi.delta)
    last = coeffwise_frobenius(v[r - 1], 1)
    first = Poly(tower, [tower.neg(tower.mul(g[0], inv)), inv]) * last
    rest = [coeffwise_frobenius(v[i - 1], 1) - last.scale(tower.mul(g[i], inv)) for i in range(1, r)]
    return CoordinateVector((first, *rest))


def _columns(phi: DrinfeldModule, u: OrePoly) -> list[CoordinateVector]:
    columns = [motive_coordinates(phi, u)]
    for _ in range(1, phi.rank):
        columns.append(motive_tau_action(phi, columns[-1]))
    return columns


def matrix_of(phi: DrinfeldModule, u: OrePoly) -> PolyMatrix:
    """r x r matrix over K[T] whose column j holds the coordinates of tau^j u"""
    columns = _columns(phi, u)
    matrix = PolyMatrix.from_columns(phi.tower, [c.entries for c in columns])
    if get_settings().check_bounds and not u.is_zero():
        assert matrix_within_bounds(matrix, u.degree, phi.rank), "motive matrix degree bound violated"
    return matrix


def matrix_within_bounds(matrix: PolyMatrix, n: int, r: int) -> bool:
    """deg P_{i,j} <= ((n + j) - i) / r, with P_{i,j} = 0 when n + j < i"""
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            entry = matrix[i, j]
            if n + j < i:
                if not entry.is_zero():
                    return False
            elif entry.degree > (n + j - i) // r:
                return False
    return True


def motive_matrix(phi: DrinfeldModule, u: Morphism) -> PolyMatrix:
    """Matrix of the motive map of u in the canonical bases"""
    if u.domain != phi:
        raise NotAMorphism("morphism does not start at the given module")
    return matrix_of(phi, u.u)


def charpoly_over_fq(
    tower: FieldTower,
    matrix: PolyMatrix,
    degree_bound: int,
    strategy: Strategy | None = None,
) -> CharPoly:
    """Characteristic polynomial of a K[T]-matrix whose coefficients must lie in F_q[T]"""
    chi = charpoly_poly_matrix(matrix, degree_bound=degree_bound, strategy=strategy)
    return CharPoly(tuple(_down_to_fq(tower, c) for c in chi.coeffs))


def _down_to_fq(tower: FieldTower, poly: Poly) -> Poly:
    try:
        return poly.map_coeffs(tower.to_fq, tower.fq)
    except CoefficientNotRational as exc:
        raise CoefficientNotRational(
            "result has a coefficient outside F_q[T]", {"polynomial": repr(poly), **exc.details}
        ) from exc


def endomorphism_charpoly(
    phi: DrinfeldModule,
    u: Morphism,
    strategy: Strategy | None = None,
) -> CharPoly:
    """Characteristic polynomial of an endomorphism, from its motive matrix"""
    if not u.is_endomorphism:
        raise NotEndomorphism("characteristic polynomials need an endomorphism")
    matrix = motive_matrix(phi, u)
    return charpoly_over_fq(phi.tower, matrix, max(u.degree, 0), strategy)


def isogeny_norm(
    phi: DrinfeldModule,
    psi: DrinfeldModule,
    u: Morphism,
    strategy: Strategy | None = None,
) -> NormIdeal:
    """Norm ideal of an isogeny, generated by the determinant of its motive matrix"""
    if u.codomain != psi:
        raise NotAMorphism("morphism does not end at the given module")
    if u.u.is_zero():
        raise ZeroIsogeny("the zero morphism has no norm")
    matrix = motive_matrix(phi, u)
    det = det_poly_matrix(matrix, degree_bound=u.degree, strategy=strategy)
    return NormIdeal(_down_to_fq(phi.tower, det.monic()))


def norm_of_charpoly(charpoly: CharPoly) -> NormIdeal:
    """The norm of an endomorphism is generated by (-1)^r pi_0"""
    return NormIdeal(charpoly.constant_term().monic())


def coordinates_to_ore(phi: DrinfeldModule, v: Sequence[Poly]) -> OrePoly:
    """Inverse of motive_coordinates: sum_i f_i(T) * tau^i = sum_i sum_k c_{ik} tau^i phi_T^k"""
    tower = phi.tower
    cache = _phi_powers(phi)
    result = OrePoly(tower)
    for i, f in enumerate(v):
        tau_i = OrePoly.tau(tower, i)
        for k, c in enumerate(f.coeffs):
            if tower.is_zero(c):
                continue
            term = ore_mul(tau_i, _phi_power(phi, k, cache)).scale_left(c)
            result = result + term
    return result
