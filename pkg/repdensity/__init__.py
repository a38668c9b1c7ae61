"""
repdensity - exact densities of irreducible representations of classical
Lie algebras whose degree is not divisible by m.
"""

# Import main components for convenient access
from .bounds import BoundChecker
from .config import RunConfig
from .density_engine import DensityEngine, EngineOptions, ExactDensity
from .exceptions import DensityError
from .root_systems import AlgebraId, GroupId
from .verification import run_suites

__version__ = "1.0.0"
__all__ = [
    "AlgebraId",
    "GroupId",
    "DensityEngine",
    "EngineOptions",
    "ExactDensity",
    "BoundChecker",
    "RunConfig",
    "run_suites",
    "DensityError",
]
