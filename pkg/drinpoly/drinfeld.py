"""
Drinfeld F_q[T]-modules phi_T = g_0 + g_1 tau + ... + g_r tau^r and their morphisms
"""

from __future__ import annotations

import random
from collections.abc import Sequence

from .fields import FieldTower, KElement
from .ore import OrePoly, height, ore_divmod_right, ore_mul
from .polynomials import Poly
from .types import (
    GammaMismatch,
    NotAMorphism,
    RankZero,
    TowerMismatch,
    ZeroLeadingCoefficient,
)


class DrinfeldModule:
    """A Drinfeld module over the tower, determined by the coefficients of phi_T"""

    def __init__(self, tower: FieldTower, g: Sequence[KElement]):
        g = tuple(g)
        if len(g) >= 2 and tower.is_zero(g[-1]):
            raise ZeroLeadingCoefficient("leading coefficient g_r is zero", {"length": len(g)})
        if len(g) < 2:
            raise RankZero("phi_T needs tau-degree at least one", {"length": len(g)})
        self.tower = tower
        self.g: tuple[KElement, ...] = g
        self.rank = len(g) - 1
        self.phi_T = OrePoly(tower, g)
        # p(T), monic generator of the characteristic
        self.char_poly_p: Poly = tower.min_poly_over_fq(g[0])
        self.m = self.char_poly_p.degree

    @property
    def gamma_T(self) -> KElement:  # noqa: N802
        return self.g[0]

    @property
    def delta(self) -> KElement:
        """Leading coefficient g_r"""
        return self.g[-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldModule):
            return NotImplemented
        return self.g == other.g and self.tower == other.tower

    def __hash__(self) -> int:
        return hash(self.g)

    def __repr__(self) -> str:
        return f"DrinfeldModule(rank={self.rank}, q={self.tower.q}, d={self.tower.d}, phi_T={self.phi_T!r})"


class Morphism:
    """u: phi -> psi with u * phi_T = psi_T * u, validated at construction"""

    def __init__(self, domain: DrinfeldModule, codomain: DrinfeldModule, u: OrePoly):
        if domain.tower != codomain.tower or u.tower != domain.tower:
            raise TowerMismatch("morphism operands live over different towers")
        if domain.gamma_T != codomain.gamma_T:
            raise GammaMismatch(
                "domain and codomain have different gamma(T)",
                {"domain": domain.tower.format(domain.gamma_T), "codomain": codomain.tower.format(codomain.gamma_T)},
            )
        if ore_mul(u, domain.phi_T) != ore_mul(codomain.phi_T, u):
            raise NotAMorphism("u * phi_T != psi_T * u", {"degree": u.degree})
        if not u.is_zero() and height(u) % domain.m:
            raise NotAMorphism("height is not a multiple of deg p", {"height": height(u), "m": domain.m})
        self.domain = domain
        self.codomain = codomain
        self.u = u

    @property
    def is_isogeny(self) -> bool:
        return not self.u.is_zero()

    @property
    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    @property
    def height(self) -> int:
        return height(self.u)

    @property
    def degree(self) -> int:
        return self.u.degree

    def __repr__(self) -> str:
        return f"Morphism(degree={self.degree}, endomorphism={self.is_endomorphism})"


def make_drinfeld(tower: FieldTower, g: Sequence[KElement]) -> DrinfeldModule:
    return DrinfeldModule(tower, g)


def phi_a(phi: DrinfeldModule, a: Poly) -> OrePoly:
    """Image of a in F_q[T] under phi, by Horner's rule in K{tau}"""
    tower = phi.tower
    result = OrePoly(tower)
    for c in reversed(a.coeffs):
        result = ore_mul(result, phi.phi_T) + OrePoly.constant(tower, tower.embed(c))
    return result


def make_morphism(phi: DrinfeldModule, psi: DrinfeldModule, u: OrePoly) -> Morphism:
    return Morphism(phi, psi, u)


def frobenius_endo(phi: DrinfeldModule) -> Morphism:
    """The Frobenius endomorphism tau^d"""
    return Morphism(phi, phi, OrePoly.tau(phi.tower, phi.tower.d))


def push_forward(phi: DrinfeldModule, u: OrePoly) -> DrinfeldModule | None:
    """The module psi with psi_T * u = u * phi_T, when it exists and shares gamma with phi"""
    if u.is_zero():
        return None
    quotient, remainder = ore_divmod_right(ore_mul(u, phi.phi_T), u)
    if not remainder.is_zero() or quotient.degree != phi.rank:
        return None
    if quotient.coefficient(0) != phi.gamma_T:
        return None
    return DrinfeldModule(phi.tower, quotient.coeffs)


def random_module(tower: FieldTower, r: int, seed: int = 0) -> DrinfeldModule:
    """Deterministic module of rank r with g_r nonzero"""
    if r < 1:
        raise RankZero("rank must be at least one", {"rank": r})
    rng = random.Random(seed)
    g = [tower.random_element(rng) for _ in range(r)]
    delta = tower.random_element(rng)
    while tower.is_zero(delta):
        delta = tower.random_element(rng)
    return DrinfeldModule(tower, [*g, delta])


def compose(v: Morphism, u: Morphism) -> Morphism:
    """v o u, the Ore product v * u"""
    if u.codomain != v.domain:
        raise NotAMorphism("morphisms are not composable")
    return Morphism(u.domain, v.codomain, ore_mul(v.u, u.u))


def module_height(phi: DrinfeldModule) -> int:
    """Height of phi_{p(T)} divided by deg p"""
    return height(phi_a(phi, phi.char_poly_p)) // phi.m


def is_supersingular(phi: DrinfeldModule) -> bool:
    return module_height(phi) == phi.rank


def check_morphism_on(morphism: Morphism, a: Poly) -> bool:
    """u * phi_a == psi_a * u for the given a"""
    u = morphism.u
    return ore_mul(u, phi_a(morphism.domain, a)) == ore_mul(phi_a(morphism.codomain, a), u)
