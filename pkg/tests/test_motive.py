"""
Tests for motive coordinates, motive matrices, endomorphism charpolys and isogeny norms
"""

import random

import pytest

from drinpoly.config import get_settings, reset_settings
from drinpoly.drinfeld import (
    DrinfeldModule,
    compose,
    frobenius_endo,
    make_morphism,
    phi_a,
    random_module,
)
from drinpoly.fields import random_tower
from drinpoly.linalg import PolyMatrix
from drinpoly.motive import (
    CharPoly,
    CoordinateVector,
    coordinates_to_ore,
    endomorphism_charpoly,
    isogeny_norm,
    matrix_within_bounds,
    motive_coordinates,
    motive_matrix,
    motive_tau_action,
    norm_of_charpoly,
)
from drinpoly.oracle import cayley_hamilton_residue
from drinpoly.ore import OrePoly
from drinpoly.polynomials import Poly, PolyRing
from drinpoly.types import NotEndomorphism, ZeroIsogeny

STRATEGIES = ["division_free", "interpolation"]


def _vector(*entries):
    return CoordinateVector(tuple(entries))


def _random_a(fq, rng, max_degree=3):
    while True:
        a = Poly(fq, [fq.random_element(rng) for _ in range(rng.randrange(max_degree + 1) + 1)])
        if not a.is_zero():
            return a


def test_coordinates_examples(phi, tower, kt):
    zero = Poly(tower)

    assert motive_coordinates(phi, phi.phi_T) == _vector(kt((0, 0), (1, 0)), zero)
    assert motive_coordinates(phi, OrePoly.tau(tower, 2)) == _vector(kt((0, 2), (1, 0)), kt((2, 0)))


def test_tau_action_examples(phi, tower, kt):
    one, zero = Poly.one(tower), Poly(tower)

    assert motive_tau_action(phi, _vector(one, zero)) == _vector(zero, one)
    assert motive_tau_action(phi, _vector(zero, one)) == _vector(kt((0, 2), (1, 0)), kt((2, 0)))
    assert motive_tau_action(phi, _vector(kt((0, 2), (1, 0)), kt((2, 0)))) == _vector(
        kt((0, 1), (2, 0)), kt((1, 1), (1, 0))
    )


def test_motive_matrix_of_frobenius(phi, tower, kt):
    expected = PolyMatrix.from_rows(
        tower,
        [
            [kt((0, 2), (1, 0)), kt((0, 1), (2, 0))],
            [kt((2, 0)), kt((1, 1), (1, 0))],
        ],
    )

    matrix = motive_matrix(phi, frobenius_endo(phi))
    assert matrix == expected
    assert matrix_within_bounds(matrix, 2, 2)


@pytest.mark.parametrize("p,e,d,r", [(2, 1, 3, 2), (3, 1, 2, 3), (2, 2, 2, 2), (5, 1, 2, 1)])
def test_coordinates_round_trip_and_bounds(p, e, d, r):
    tower = random_tower(p, e, d, seed=r)
    phi = random_module(tower, r, seed=d)
    rng = random.Random(p * 100 + d)
    for _ in range(6):
        n = rng.randrange(12)
        f = OrePoly(tower, [tower.random_element(rng) for _ in range(n + 1)])
        coords = motive_coordinates(phi, f)
        assert coords.rank == r
        assert coords.within_bounds(max(f.degree, 0))
        assert coordinates_to_ore(phi, coords.entries) == f


def test_tau_action_matches_left_multiplication(phi, tower):
    rng = random.Random(3)
    tau = OrePoly.tau(tower)
    for _ in range(6):
        f = OrePoly(tower, [tower.random_element(rng) for _ in range(rng.randrange(8) + 1)])
        assert motive_tau_action(phi, motive_coordinates(phi, f)) == motive_coordinates(phi, tau * f)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_frobenius_charpoly_from_motive(phi, ft, strategy):
    charpoly = endomorphism_charpoly(phi, frobenius_endo(phi), strategy)

    assert charpoly.coefficients == (ft(1, 0, 1), ft(2, 1), ft(1))
    assert charpoly.trace() == ft(1, 2)
    assert charpoly.to_text() == "X^2 + (T + 2)*X + (T^2 + 1)"


def test_charpoly_of_phi_a(phi, tower):
    """phi_a has characteristic polynomial (X - a)^r"""

    rng = random.Random(12)
    fq = tower.fq
    ring = PolyRing(fq)
    for _ in range(5):
        a = _random_a(fq, rng)
        charpoly = endomorphism_charpoly(phi, make_morphism(phi, phi, phi_a(phi, a)))
        assert charpoly.as_poly() == Poly(ring, [-a, Poly.one(fq)]) ** phi.rank


def test_norm_examples(phi, ft):
    assert isogeny_norm(phi, phi, make_morphism(phi, phi, phi.phi_T)).generator == ft(0, 0, 1)
    assert isogeny_norm(phi, phi, frobenius_endo(phi)).to_text() == "(T^2 + 1)"


def test_norm_of_phi_a(phi, tower):
    rng = random.Random(20)
    for _ in range(20):
        a = _random_a(tower.fq, rng)
        norm = isogeny_norm(phi, phi, make_morphism(phi, phi, phi_a(phi, a)))
        assert norm.generator == (a**phi.rank).monic()


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_norm_is_multiplicative(phi, tower, strategy):
    rng = random.Random(30)
    frob = frobenius_endo(phi)
    for _ in range(4):
        a = _random_a(tower.fq, rng, 2)
        u = make_morphism(phi, phi, phi_a(phi, a))
        chain = compose(u, frob)
        assert isogeny_norm(phi, phi, chain, strategy).generator == (
            isogeny_norm(phi, phi, u, strategy).generator * isogeny_norm(phi, phi, frob, strategy).generator
        )


def test_norm_of_constant_isogeny(phi, tower, x, ft):
    psi = DrinfeldModule(tower, [x, tower.embed(2), tower.one()])
    u = make_morphism(phi, psi, OrePoly.constant(tower, x))

    assert isogeny_norm(phi, psi, u).generator == ft(1)
    with pytest.raises(NotEndomorphism):
        endomorphism_charpoly(phi, u)


def test_zero_isogeny(phi, tower):
    zero = make_morphism(phi, phi, OrePoly.zero(tower))

    with pytest.raises(ZeroIsogeny):
        isogeny_norm(phi, phi, zero)


def test_endomorphism_norm_from_charpoly(phi, tower):
    rng = random.Random(40)
    for _ in range(4):
        u = make_morphism(phi, phi, phi_a(phi, _random_a(tower.fq, rng)) * OrePoly.tau(tower, 2))
        assert norm_of_charpoly(endomorphism_charpoly(phi, u)) == isogeny_norm(phi, phi, u)


def test_bounds_checked_when_enabled(phi, monkeypatch):
    monkeypatch.setenv("DRINPOLY_CHECK_BOUNDS", "true")
    reset_settings()
    assert get_settings().check_bounds

    u = make_morphism(phi, phi, phi_a(phi, Poly(phi.tower.fq, [1, 2, 1])))
    assert matrix_within_bounds(motive_matrix(phi, u), u.degree, phi.rank)


def test_charpoly_must_be_monic(ft):
    with pytest.raises(ValueError):
        CharPoly((ft(1), ft(2)))


def test_charpoly_profile_of_frobenius(phi, ft):
    charpoly = endomorphism_charpoly(phi, frobenius_endo(phi))

    assert charpoly == CharPoly((ft(1, 0, 1), ft(2, 1), ft(1)))
    assert charpoly.degree_profile() == [2, 1, 0]


@pytest.mark.parametrize("p,e,d,r", [(2, 1, 3, 2), (3, 1, 2, 3), (2, 2, 2, 2), (5, 1, 3, 2)])
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_random_endomorphism_satisfies_its_charpoly(p, e, d, r, strategy):
    tower = random_tower(p, e, d, seed=p + d)
    rng = random.Random(p * 100 + d * 10 + r)
    for seed in range(3):
        phi = random_module(tower, r, seed=seed)
        a, b = _random_a(tower.fq, rng, 2), _random_a(tower.fq, rng, 2)
        u = make_morphism(phi, phi, phi_a(phi, a) * frobenius_endo(phi).u + phi_a(phi, b))

        charpoly = endomorphism_charpoly(phi, u, strategy)

        assert charpoly.rank == r
        assert cayley_hamilton_residue(phi, u, charpoly).is_zero()
