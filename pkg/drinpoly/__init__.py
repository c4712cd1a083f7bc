"""
drinpoly - characteristic polynomials and norms of Drinfeld modules over finite fields
"""

__version__ = "0.1.0"

from .drinfeld import DrinfeldModule, Morphism, frobenius_endo, make_drinfeld, make_morphism
from .fields import FieldTower, build_tower, random_tower
from .frobenius import Method, frobenius_charpoly
from .motive import CharPoly, NormIdeal, endomorphism_charpoly, isogeny_norm
from .ore import OrePoly
from .parser import parse_module, parse_ore
from .types import (
    DrinpolyError,
    NotAMorphism,
    ParseError,
)

__all__ = [
    "CharPoly",
    "DrinfeldModule",
    "DrinpolyError",
    "FieldTower",
    "Method",
    "Morphism",
    "NormIdeal",
    "NotAMorphism",
    "OrePoly",
    "ParseError",
    "build_tower",
    "endomorphism_charpoly",
    "frobenius_charpoly",
    "frobenius_endo",
    "isogeny_norm",
    "make_drinfeld",
    "make_morphism",
    "parse_module",
    "parse_ore",
    "random_tower",
]
