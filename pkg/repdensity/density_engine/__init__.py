"""
Density Engine Module

Exact densities of irreducible representations whose degree is not
divisible by m, for classical Lie algebras, their groups and their
self-dual and orthogonal subfamilies.
"""

from .cache import DensityCache
from .counting import count_nondivisible, nondivisible_predicate
from .engine import DensityEngine, DensityRequest, EngineOptions
from .result import ENGINE_VERSION, ExactDensity, PrimePowerDensity

__all__ = [
    "ENGINE_VERSION",
    "DensityCache",
    "DensityEngine",
    "DensityRequest",
    "EngineOptions",
    "ExactDensity",
    "PrimePowerDensity",
    "count_nondivisible",
    "nondivisible_predicate",
]
