"""
Public exceptions for drinpoly
"""

from typing import Any


class DrinpolyError(Exception):
    """Base exception for all drinpoly errors"""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.details = details or {}


# fields


class NotPrime(DrinpolyError):  # noqa: N818
    """The characteristic given for a tower is not a prime"""

    pass


class ReducibleModulus(DrinpolyError):  # noqa: N818
    """A tower modulus factors over its base field"""

    pass


class NonMonicModulus(DrinpolyError):  # noqa: N818
    """A tower modulus is not monic, or has degree < 1"""

    pass


class TowerMismatch(DrinpolyError):  # noqa: N818
    """Operands live over different field towers"""

    pass


# polynomials and Ore polynomials


class DivisionByZero(DrinpolyError):  # noqa: N818
    """Euclidean division by the zero polynomial"""

    pass


class ZeroPolynomial(DrinpolyError):  # noqa: N818
    """Operation undefined on the zero polynomial"""

    pass


class DuplicateAbscissa(DrinpolyError):  # noqa: N818
    """Interpolation points share an abscissa"""

    pass


# linear algebra


class NotSquare(DrinpolyError):  # noqa: N818
    """Determinant or characteristic polynomial of a non-square matrix"""

    pass


class InsufficientPoints(DrinpolyError):  # noqa: N818
    """Not enough evaluation points could be found"""

    pass


# Drinfeld modules and morphisms


class ZeroLeadingCoefficient(DrinpolyError):  # noqa: N818
    """The leading coefficient g_r of phi_T is zero"""

    pass


class RankZero(DrinpolyError):  # noqa: N818
    """phi_T must have tau-degree at least one"""

    pass


class GammaMismatch(DrinpolyError):  # noqa: N818
    """Domain and codomain do not share gamma(T)"""

    pass


class NotAMorphism(DrinpolyError):  # noqa: N818
    """u * phi_T != psi_T * u"""

    pass


class NotEndomorphism(DrinpolyError):  # noqa: N818
    """A morphism with distinct domain and codomain was given where an endomorphism is required"""

    pass


class ZeroIsogeny(DrinpolyError):  # noqa: N818
    """The zero morphism has no norm"""

    pass


class CoefficientNotRational(DrinpolyError):  # noqa: N818
    """A result expected in F_q[T] has a coefficient outside F_q"""

    pass


class NonPeriodicCoefficient(DrinpolyError):  # noqa: N818
    """A characteristic polynomial coefficient is not a polynomial in t^d"""

    pass


# oracle


class BudgetExceeded(DrinpolyError):  # noqa: N818
    """Exhaustive search would enumerate more candidates than allowed"""

    pass


class NoCandidate(DrinpolyError):  # noqa: N818
    """No candidate survived the exhaustive search"""

    pass


class MultipleCandidates(DrinpolyError):  # noqa: N818
    """More than one candidate survived the exhaustive search"""

    pass


# input files


class ParseError(DrinpolyError):
    """Malformed module or Ore polynomial file"""

    def __init__(
        self,
        message: str,
        line: int = 1,
        column: int = 1,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(f"{message} (line {line}, column {column})", details)
        self.line = line
        self.column = column
