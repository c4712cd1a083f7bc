"""
Tests for Drinfeld modules and morphisms
"""

import pytest

from drinpoly.drinfeld import (
    DrinfeldModule,
    check_morphism_on,
    compose,
    frobenius_endo,
    is_supersingular,
    make_drinfeld,
    make_morphism,
    module_height,
    phi_a,
    push_forward,
    random_module,
)
from drinpoly.fields import build_tower
from drinpoly.ore import OrePoly, ore_mul
from drinpoly.types import (
    GammaMismatch,
    NotAMorphism,
    RankZero,
    TowerMismatch,
    ZeroLeadingCoefficient,
)


def test_module_invariants(phi, ft):
    assert phi.rank == 2
    assert phi.char_poly_p == ft(1, 0, 1)
    assert phi.m == 2
    assert phi.delta == phi.tower.one()


def test_construction_errors(tower, x):
    with pytest.raises(ZeroLeadingCoefficient):
        make_drinfeld(tower, [x, tower.one(), tower.zero()])
    with pytest.raises(RankZero):
        make_drinfeld(tower, [x])


def test_phi_a_is_horner(phi, ft):
    square = phi_a(phi, ft(0, 0, 1))

    assert square == ore_mul(phi.phi_T, phi.phi_T)
    assert square.degree == 4
    assert phi_a(phi, ft(2)) == OrePoly.constant(phi.tower, phi.tower.embed(2))


def test_frobenius_is_an_endomorphism(phi, tower):
    frob = frobenius_endo(phi)

    assert frob.u == OrePoly.tau(tower, 2)
    assert frob.is_endomorphism
    assert frob.is_isogeny
    assert make_morphism(phi, phi, OrePoly.tau(tower, 2)).degree == 2


def test_tau_is_not_an_endomorphism(phi, tower):
    with pytest.raises(NotAMorphism):
        make_morphism(phi, phi, OrePoly.tau(tower))


def test_gamma_mismatch(phi, tower, x):
    twisted = DrinfeldModule(tower, [tower.scalar_mul(2, x), tower.one(), tower.one()])

    with pytest.raises(GammaMismatch):
        make_morphism(phi, twisted, OrePoly.tau(tower))


def test_constant_isogeny(phi, tower, x):
    """Conjugating by x gives phi' = x + 2 tau + tau^2"""

    psi = DrinfeldModule(tower, [x, tower.embed(2), tower.one()])
    u = OrePoly.constant(tower, x)

    morphism = make_morphism(phi, psi, u)
    assert morphism.is_isogeny
    assert not morphism.is_endomorphism
    assert morphism.height == 0
    assert push_forward(phi, u) == psi


def test_push_forward(phi, tower):
    assert push_forward(phi, OrePoly.tau(tower, 2)) == phi
    assert push_forward(phi, OrePoly.tau(tower)) is None
    assert push_forward(phi, OrePoly.zero(tower)) is None


def test_compose(phi, tower, x):
    frob = frobenius_endo(phi)

    assert compose(frob, frob).u == OrePoly.tau(tower, 4)

    psi = DrinfeldModule(tower, [x, tower.embed(2), tower.one()])
    u = make_morphism(phi, psi, OrePoly.constant(tower, x))
    with pytest.raises(NotAMorphism):
        compose(u, u)


def test_morphism_commutes_with_every_a(phi, ft):
    frob = frobenius_endo(phi)

    assert check_morphism_on(frob, ft(1, 1, 2, 1))
    assert check_morphism_on(make_morphism(phi, phi, phi.phi_T), ft(0, 2, 1))


def test_height_of_ordinary_module(phi):
    assert module_height(phi) == 1
    assert not is_supersingular(phi)


def test_random_module_is_deterministic(tower):
    a = random_module(tower, 3, seed=5)

    assert a == random_module(tower, 3, seed=5)
    assert a.rank == 3
    assert not tower.is_zero(a.delta)

    with pytest.raises(RankZero):
        random_module(tower, 0)


def test_tower_mismatch(phi):
    other = build_tower(5, None, [2, 0, 1])
    psi = random_module(other, 2, seed=1)

    with pytest.raises(TowerMismatch):
        make_morphism(phi, psi, OrePoly.one(other))
