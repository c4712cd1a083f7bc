"""
Independent checks for computed characteristic polynomials
"""

from __future__ import annotations

import itertools

from .config import get_settings
from .drinfeld import DrinfeldModule, Morphism, phi_a
from .frobenius import frobenius_norm_formula
from .motive import CharPoly
from .ore import OrePoly, ore_mul
from .polynomials import Poly
from .types import BudgetExceeded, DrinpolyError, MultipleCandidates, NoCandidate, NotEndomorphism


def cayley_hamilton_residue(phi: DrinfeldModule, u: Morphism, charpoly: CharPoly) -> OrePoly:
    """sum_i phi_{pi_i} * u^i in K{tau}; zero exactly when the candidate annihilates u"""
    if not u.is_endomorphism:
        raise NotEndomorphism("Cayley-Hamilton residue needs an endomorphism")
    tower = phi.tower
    residue = OrePoly(tower)
    power = OrePoly.one(tower)
    for i, coeff in enumerate(charpoly.coefficients):
        if i:
            power = ore_mul(power, u.u)
        if coeff.is_zero():
            continue
        residue = residue + ore_mul(phi_a(phi, coeff), power)
    return residue


def rank2_trace_exhaustive(phi: DrinfeldModule, budget: int | None = None) -> CharPoly:
    """Find the Frobenius trace of a rank-2 module by trying every t with deg t <= d/2"""
    if phi.rank != 2:
        raise DrinpolyError("exhaustive trace search needs a rank-2 module", {"rank": phi.rank})
    tower = phi.tower
    fq = tower.fq
    d = tower.d
    limit = get_settings().oracle_budget if budget is None else budget
    width = d // 2 + 1
    candidates = fq.order**width
    if candidates > limit:
        raise BudgetExceeded(
            f"{candidates} trace candidates exceed the budget of {limit}",
            {"candidates": candidates, "budget": limit},
        )

    constant = frobenius_norm_formula(phi).constant_term()
    frob = OrePoly.tau(tower, d)
    # X^2 - t X + pi_0 at tau^d, with the t-dependent part spread over the basis T^k
    fixed = phi_a(phi, constant) + ore_mul(frob, frob)
    partials = [ore_mul(phi_a(phi, Poly.monomial(fq, fq.one(), k)), frob) for k in range(width)]

    found: list[Poly] = []
    for digits in itertools.product(list(fq.elements()), repeat=width):
        residue = fixed
        for c, part in zip(digits, partials, strict=True):
            if c:
                residue = residue - part.scale_left(tower.embed(c))
        if residue.is_zero():
            found.append(Poly(fq, digits))
    if not found:
        raise NoCandidate("no trace candidate annihilates the Frobenius")
    if len(found) > 1:
        raise MultipleCandidates(
            f"{len(found)} trace candidates annihilate the Frobenius", {"count": len(found)}
        )
    trace = found[0]
    return CharPoly((constant, -trace, Poly.one(fq)))
