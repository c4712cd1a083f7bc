"""
Tests for module/Ore file parsing and rendering
"""

import pytest

from drinpoly.drinfeld import random_module
from drinpoly.fields import random_tower
from drinpoly.motive import CharPoly
from drinpoly.ore import OrePoly
from drinpoly.parser import (
    ModuleFile,
    parse_expression,
    parse_module,
    parse_ore,
    render_charpoly,
    render_module,
    render_ore,
    render_poly,
)
from drinpoly.polynomials import Poly
from drinpoly.types import ParseError, ReducibleModulus, ZeroLeadingCoefficient


def test_parse_f9_module(phi, module_text):
    parsed = parse_module(module_text)

    assert parsed == phi
    assert parsed.rank == 2
    assert parsed.tower.q == 3
    assert parsed.tower.d == 2


def test_parse_module_over_f4():
    text = """p = 2
fq_modulus = y^2 + y + 1
k_modulus = x^3 + x + 1
phi = y, 1, y*x + 1
"""
    phi = parse_module(text)
    tower = phi.tower

    assert tower.q == 4
    assert tower.d == 3
    assert phi.gamma_T == tower.embed(2)
    assert phi.delta == (1, 2, 0)


def test_zero_leading_coefficient():
    with pytest.raises(ZeroLeadingCoefficient):
        parse_module("p = 3\nk_modulus = x^2 + 1\nphi = x, 1, 0\n")


def test_construction_errors_surface_unchanged():
    with pytest.raises(ReducibleModulus):
        parse_module("p = 3\nk_modulus = x^2\nphi = x, 1\n")


def test_double_caret_points_at_second_caret():
    with pytest.raises(ParseError) as excinfo:
        parse_module("p = 3\nk_modulus = x^2 + 1\nphi = x^^2, 1, 1\n")

    assert excinfo.value.line == 3
    assert excinfo.value.column == 9
    assert str(excinfo.value).endswith("(line 3, column 9)")


@pytest.mark.parametrize(
    "text,line",
    [
        ("p = 3\nk_modulus = x^2 + 1\nphi = x, 1\nphi = x, 2\n", 4),
        ("p = 3\nk_modulus = x^2 + 1\nrank = 2\n", 3),
        ("p = 3\nk_modulus = x^2 + 1\n", 2),
        ("p = 3\nk_modulus = x^2 + 1\ngamma = 2*x\nphi = x, 1, 1\n", 3),
        ("p = three\nk_modulus = x^2 + 1\nphi = x, 1\n", 1),
        ("p = 3\nk_modulus = x^2 + 1\nphi = x, , 1\n", 3),
        ("p = 3\nk_modulus = x^2 + 1\nphi = T, 1\n", 3),
        ("p = 3\nk_modulus = x^2 + 1\nphi = x^x, 1\n", 3),
        ("p = 3\nk_modulus x^2 + 1\nphi = x, 1\n", 2),
        ("p = 3\nk_modulus = (x + 1\nphi = x, 1\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_module(text)

    assert excinfo.value.line == line


def test_comments_and_blank_lines(phi):
    text = "\n# header\np = 3   # prime\n\nk_modulus = x^2 + 1\nphi = x, 1, 1  # g_0, g_1, g_2\n"

    assert parse_module(text) == phi


def test_expression_precedence():
    node = parse_expression("-x^2 + 2*x")

    assert node.op == "+"
    assert node.args[0].op == "neg"
    assert node.args[0].args[0].op == "^"
    assert node.args[1].op == "*"

    right = parse_expression("2^3^2")
    assert right.op == "^"
    assert right.args[1].op == "^"


def test_parse_ore_uses_the_twist(phi, tower, x):
    assert parse_ore("ore = x + tau + tau^2", tower) == phi.phi_T
    assert parse_ore("ore = tau*x", tower) == OrePoly.monomial(tower, (0, 2), 1)
    assert parse_ore("# frobenius\nore = tau^2\n", tower) == OrePoly.tau(tower, 2)


def test_parse_ore_errors(tower):
    with pytest.raises(ParseError):
        parse_ore("u = tau", tower)
    with pytest.raises(ParseError):
        parse_ore("ore = tau\nore = 1", tower)
    with pytest.raises(ParseError):
        parse_ore("ore = y*tau", tower)


def test_render_poly(ft):
    assert render_poly(ft(1, 2, 1)) == "T^2 + 2*T + 1"
    assert render_poly(ft(0, 1)) == "T"
    assert render_poly(ft()) == "0"


def test_render_over_f9_coefficients():
    tower = random_tower(3, 2, 2, seed=0)
    fq = tower.fq
    poly = Poly(fq, [fq.from_coefficients([1, 1]), 1])

    assert render_poly(poly) == "T + y + 1"
    assert render_poly(Poly(fq, [0, fq.from_coefficients([1, 1])])) == "(y + 1)*T"


def test_render_charpoly(ft):
    charpoly = CharPoly((ft(1, 0, 1), ft(2, 1), ft(1)))

    assert render_charpoly(charpoly) == "X^2 + (T + 2)*X + (T^2 + 1)"
    assert render_charpoly(CharPoly((ft(), ft(), ft(1)))) == "X^2"


def test_render_ore(phi, tower):
    assert render_ore(phi.phi_T) == "tau^2 + tau + x"
    assert render_ore(OrePoly.zero(tower)) == "0"


def test_render_module(phi):
    text = render_module(phi)

    assert text.splitlines()[1:] == ["p = 3", "k_modulus = x^2 + 1", "gamma = x", "phi = x, 1, 1"]
    assert parse_module(text) == phi


@pytest.mark.parametrize("p,e,d,r", [(2, 1, 5, 3), (3, 2, 2, 2), (2, 3, 2, 1), (7, 1, 3, 4)])
def test_render_round_trip(p, e, d, r):
    tower = random_tower(p, e, d, seed=p + e)
    for seed in range(3):
        phi = random_module(tower, r, seed=seed)
        assert parse_module(render_module(phi)) == phi


def test_module_file_positions(module_text):
    raw = ModuleFile.from_text(module_text)

    assert raw.p.strip() == "3"
    assert raw.positions["phi"][0] == 5
