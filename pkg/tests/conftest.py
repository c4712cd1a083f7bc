"""
Shared fixtures: the 9-element tower F_9 = F_3[x]/(x^2 + 1) and phi_T = x + tau + tau^2 over it
"""

import os

import pytest

from drinpoly.config import reset_settings
from drinpoly.drinfeld import DrinfeldModule
from drinpoly.fields import build_tower
from drinpoly.polynomials import Poly

MODULE_TEXT = """# phi_T = x + tau + tau^2 over F_9
p = 3
k_modulus = x^2 + 1
gamma = x
phi = x, 1, 1
"""


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from default settings"""
    for key in list(os.environ):
        if key.startswith("DRINPOLY_"):
            monkeypatch.delenv(key)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def tower():
    return build_tower(3, None, [1, 0, 1])


@pytest.fixture
def x(tower):
    return tower.gen()


@pytest.fixture
def phi(tower, x):
    return DrinfeldModule(tower, [x, tower.one(), tower.one()])


@pytest.fixture
def kt(tower):
    """Build K[T] polynomials from ascending lists of (a, b) meaning a + b x"""

    def make(*coeffs):
        return Poly(tower, [tuple(c) for c in coeffs])

    return make


@pytest.fixture
def ft(tower):
    """Build F_3[T] polynomials from ascending int lists"""

    def make(*coeffs):
        return Poly(tower.fq, list(coeffs))

    return make


@pytest.fixture
def module_text():
    return MODULE_TEXT


@pytest.fixture
def module_file(tmp_path):
    path = tmp_path / "a.dm"
    path.write_text(MODULE_TEXT)
    return path
