"""
Tests for dense polynomials
"""

import random

import pytest

from drinpoly.fields import FiniteField
from drinpoly.polynomials import (
    ZERO_DEGREE,
    Poly,
    PolyRing,
    coeffwise_frobenius,
    find_irreducible,
    gcd,
    interpolate,
    is_irreducible,
    pow_mod,
    xgcd,
)
from drinpoly.types import DivisionByZero, DuplicateAbscissa, ZeroPolynomial

F3 = FiniteField(3)


def _random_poly(field, degree, rng):
    return Poly(field, [field.random_element(rng) for _ in range(degree + 1)])


def test_zero_polynomial():
    zero = Poly(F3)

    assert zero.degree == ZERO_DEGREE
    assert zero.is_zero()
    assert Poly(F3, [0, 0, 0]) == zero
    assert Poly.constant(F3, 1).degree == 0

    with pytest.raises(ZeroPolynomial):
        zero.monic()


def test_coeffwise_frobenius(tower, kt):
    """T - x becomes T + x under x -> x^3"""

    assert coeffwise_frobenius(kt((0, 2), (1, 0)), 1) == kt((0, 1), (1, 0))

    p = Poly(F3, [1, 2, 1])
    assert coeffwise_frobenius(p, 3) == p
    assert coeffwise_frobenius(Poly(tower), 3) == Poly(tower)


def test_coeffwise_frobenius_is_a_ring_homomorphism(tower):
    rng = random.Random(5)
    a = _random_poly(tower, 3, rng)
    b = _random_poly(tower, 2, rng)

    assert coeffwise_frobenius(a * b, 1) == coeffwise_frobenius(a, 1) * coeffwise_frobenius(b, 1)
    assert coeffwise_frobenius(a + b, 1) == coeffwise_frobenius(a, 1) + coeffwise_frobenius(b, 1)
    assert coeffwise_frobenius(a, tower.d) == a


def test_interpolation_examples():
    assert interpolate(F3, [(0, 1), (1, 2)]) == Poly(F3, [1, 1])
    assert interpolate(F3, [(0, 2)]) == Poly(F3, [2])
    # 2(T - 1)(T - 2) = 2T^2 + 1
    assert interpolate(F3, [(0, 1), (1, 0), (2, 0)]) == Poly(F3, [1, 0, 2])


def test_interpolation_rejects_duplicates():
    with pytest.raises(DuplicateAbscissa):
        interpolate(F3, [(1, 0), (1, 2)])


def test_interpolate_evaluate_identity(tower):
    rng = random.Random(9)
    points = list(tower.elements())
    for degree in range(len(points)):
        poly = _random_poly(tower, degree, rng)
        sample = points[: degree + 1]
        assert interpolate(tower, [(u, poly(u)) for u in sample]) == poly


def test_divmod_reconstruction():
    rng = random.Random(1)
    for _ in range(20):
        a = _random_poly(F3, rng.randrange(8), rng)
        b = _random_poly(F3, rng.randrange(4), rng)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(Poly(F3, [1, 1]), Poly(F3))


def test_gcd_is_monic():
    a = Poly.from_roots(F3, [1, 2])
    b = Poly(F3, [1, 2])  # 2T + 1 = 2(T - 1)

    assert gcd(a, b) == Poly(F3, [2, 1])
    assert gcd(Poly(F3), Poly(F3)).is_zero()


def test_xgcd_bezout():
    rng = random.Random(3)
    for _ in range(10):
        a = _random_poly(F3, 5, rng)
        b = _random_poly(F3, 3, rng)
        g, s, t = xgcd(a, b)
        assert s * a + t * b == g
        assert g == gcd(a, b)


def test_pow_mod():
    modulus = Poly(F3, [1, 0, 1])
    t = Poly.variable(F3)

    # T^3 = -T mod T^2 + 1
    assert pow_mod(t, 3, modulus) == Poly(F3, [0, 2])
    assert pow_mod(t, 0, modulus) == Poly.one(F3)


def test_irreducibility():
    assert is_irreducible(Poly(F3, [1, 0, 1]))
    assert not is_irreducible(Poly(F3, [2, 0, 1]))
    assert not is_irreducible(Poly(F3, [1]))

    found = find_irreducible(F3, 4, random.Random(0))
    assert found.degree == 4
    assert found.is_monic()
    assert is_irreducible(found)


def test_power_substitution():
    p = Poly(F3, [1, 2, 0, 1])
    spread = p.substitute_power(3)

    assert spread == Poly(F3, [1, 0, 0, 2, 0, 0, 0, 0, 0, 1])
    assert spread.is_periodic(3)
    assert not p.is_periodic(2)
    assert spread.compress_power(3) == p


def test_poly_ring_arithmetic():
    ring = PolyRing(F3)
    t = ring.variable()
    a = Poly(ring, [t, ring.one()])  # X + T

    assert (a * a).coeffs == (t * t, t + t, ring.one())
    assert Poly.from_roots(F3, [0, 1])(2) == 2
