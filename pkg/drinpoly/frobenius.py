"""
Characteristic polynomial of the Frobenius endomorphism tau^d.

Three routes to the same answer:

- ``mff``: the motive matrix of tau^d, built column by column.
- ``mku``: the same matrix by square-and-multiply on the semilinear powers M_s.
- ``csa``: a d x d matrix over F_q[t] of right multiplication by phi_T, whose
  characteristic polynomial is read back with t^d and T exchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from .config import get_settings
from .drinfeld import DrinfeldModule, frobenius_endo
from .fields import FieldTower
from .linalg import PolyMatrix, Strategy, charpoly_poly_matrix
from .motive import (
    CharPoly,
    CoordinateVector,
    NormIdeal,
    charpoly_over_fq,
    endomorphism_charpoly,
    motive_tau_action,
)
from .ore import OrePoly
from .polynomials import Poly
from .types import CoefficientNotRational, NonPeriodicCoefficient


class Method(str, Enum):
    MFF = "mff"
    MKU = "mku"
    CSA = "csa"
    AUTO = "auto"


@dataclass(frozen=True)
class SemilinearPower:
    """M_s, whose column j holds the coordinates of tau^{j+s}, with the twist x -> x^{q^s}"""

    s: int
    matrix: PolyMatrix
    twist: Any


@dataclass(frozen=True)
class CsaMatrix:
    """d x d matrix over F_q[t] of right multiplication by an Ore polynomial"""

    entries: PolyMatrix

    @property
    def size(self) -> int:
        return self.entries.rows


@dataclass(frozen=True)
class FrobeniusNorm:
    """Closed form of the Frobenius norm: unit * p(T)^{d/m}"""

    generator: Poly
    unit: Any

    @property
    def ideal(self) -> NormIdeal:
        return NormIdeal(self.generator)

    def constant_term(self) -> Poly:
        return self.generator.scale(self.unit)


# MKU


def _companion(phi: DrinfeldModule) -> PolyMatrix:
    """M_1: column j is the coordinate vector of tau^{j+1}"""
    tower = phi.tower
    r = phi.rank
    zero, one = Poly(tower), Poly.one(tower)
    columns = []
    for j in range(r):
        unit = CoordinateVector(tuple(one if i == j else zero for i in range(r)))
        columns.append(motive_tau_action(phi, unit).entries)
    return PolyMatrix.from_columns(tower, columns)


def mku_matrix(phi: DrinfeldModule, s: int) -> SemilinearPower:
    """M_s by M_{2h} = M_h M_h^{tau^h} and M_{2h+1} = M_1 M_h^{tau} M_h^{tau^{h+1}}"""
    if s < 1:
        raise ValueError("s must be at least 1")
    tower = phi.tower
    base = _companion(phi)
    frob = tower.frobenius_matrix

    def power(k: int) -> tuple[PolyMatrix, Any]:
        if k == 1:
            return base, frob
        h = k // 2
        half, twist = power(h)
        if k % 2 == 0:
            return half @ half.twist(h), twist @ twist
        return base @ half.twist(1) @ half.twist(h + 1), frob @ twist @ twist

    matrix, twist = power(s)
    return SemilinearPower(s=s, matrix=matrix, twist=twist)


# CSA


def csa_matrix(tower: FieldTower, poly: OrePoly) -> CsaMatrix:
    """sum_j F^{-j} G_j t^j, with G_j the matrix of multiplication by the j-th coefficient"""
    d = tower.d
    fq = tower.fq
    blocks = [
        tower.frobenius_power_matrix(-j % d) @ tower.multiplication_matrix(c) for j, c in enumerate(poly.coeffs)
    ]
    stacked = np.stack([b.view(np.ndarray) for b in blocks]) if blocks else np.zeros((0, d, d), dtype=np.int64)
    entries = [Poly(fq, [int(v) for v in stacked[:, a, b]]) for a in range(d) for b in range(d)]
    return CsaMatrix(PolyMatrix(fq, d, d, entries))


def frobenius_charpoly_csa(phi: DrinfeldModule, strategy: Strategy | None = None) -> CharPoly:
    """Characteristic polynomial of the Frobenius by the t^d <-> T exchange.

    Without an explicit strategy the ``csa_strategy`` setting applies, not ``linalg_strategy``.
    """
    tower = phi.tower
    d, r = tower.d, phi.rank
    fq = tower.fq
    matrix = csa_matrix(tower, phi.phi_T).entries
    strategy = strategy or get_settings().csa_strategy
    chi = charpoly_poly_matrix(matrix, degree_bound=r * d, period=d, strategy=strategy)
    # lambda[i][j]: coefficient of t^{jd} X^i
    lambdas = []
    for i, c in enumerate(chi.coeffs):
        if not c.is_periodic(d):
            raise NonPeriodicCoefficient(
                f"coefficient of X^{i} is not a polynomial in t^{d}", {"index": i, "degree": c.degree}
            )
        compressed = c.compress_power(d)
        lambdas.append([compressed.coefficient(j) for j in range(r + 1)])
    pis = [Poly(fq, [lambdas[i][j] for i in range(d + 1)]) for j in range(r + 1)]
    lead = pis[r]
    if not lead.is_constant() or lead.is_zero():
        raise CoefficientNotRational("leading coefficient is not a unit of F_q", {"leading": repr(lead)})
    inv = fq.inv(lead.leading)
    return CharPoly(tuple(p.scale(inv) for p in pis))


# closed forms and dispatch


def frobenius_norm_formula(phi: DrinfeldModule) -> FrobeniusNorm:
    """p(T)^{d/m} with the unit (-1)^{rd - r - d} N(Delta)^{-1}"""
    tower = phi.tower
    fq = tower.fq
    r, d = phi.rank, tower.d
    generator = phi.char_poly_p ** (d // phi.m)
    unit = fq.inv(tower.norm_to_fq(phi.delta))
    if (r * d - r - d) % 2:
        unit = fq.neg(unit)
    return FrobeniusNorm(generator=generator, unit=unit)


def select_method(d: int, r: int, m: int) -> Method:
    """Regime map between the three methods"""
    if r >= d:
        return Method.CSA
    if r >= d**0.44 or m <= d**0.5:
        return Method.MKU
    return Method.MFF


def frobenius_charpoly(
    phi: DrinfeldModule,
    method: Method | str = Method.AUTO,
    strategy: Strategy | None = None,
) -> CharPoly:
    method = Method(method)
    if method is Method.AUTO:
        method = select_method(phi.tower.d, phi.rank, phi.m)
    if method is Method.MFF:
        charpoly = endomorphism_charpoly(phi, frobenius_endo(phi), strategy)
    elif method is Method.MKU:
        matrix = mku_matrix(phi, phi.tower.d).matrix
        charpoly = charpoly_over_fq(phi.tower, matrix, phi.tower.d, strategy)
    else:
        charpoly = frobenius_charpoly_csa(phi, strategy)
    if get_settings().check_bounds:
        assert frobenius_degrees_hold(charpoly, phi.tower.d), "Frobenius charpoly degree bound violated"
    return charpoly


def frobenius_degrees_hold(charpoly: CharPoly, d: int) -> bool:
    """deg pi_i <= (r - i) d / r"""
    r = charpoly.rank
    return all(c.degree * r <= (r - i) * d for i, c in enumerate(charpoly.coefficients))


def frobenius_trace(phi: DrinfeldModule, method: Method | str = Method.AUTO) -> Poly:
    return frobenius_charpoly(phi, method).trace()


def frobenius_norm(phi: DrinfeldModule, method: Method | str = Method.AUTO) -> NormIdeal:
    return NormIdeal(frobenius_charpoly(phi, method).constant_term().monic())
