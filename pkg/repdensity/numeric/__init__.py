"""
Exact integer and rational primitives.

Densities are fractions.Fraction values throughout; Fraction normalises on
construction so equal densities compare equal structurally.
"""

from fractions import Fraction

from .binomial import admissible_exponent, binomial_poly, fray_congruence_holds
from .factorization import PrimePowerFactorization, factorize
from .valuation import INFINITE, Valuation, is_infinite, val

Rational = Fraction

__all__ = [
    "Rational",
    "PrimePowerFactorization",
    "factorize",
    "INFINITE",
    "Valuation",
    "val",
    "is_infinite",
    "binomial_poly",
    "fray_congruence_holds",
    "admissible_exponent",
]
