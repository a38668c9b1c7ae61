"""
Lattice densities: periodic sets, sublattices, sup-type norms and the
ball-counting oracles that check them.
"""

from .density import (
    DEFAULT_BUDGET,
    PeriodicSetSpec,
    Predicate,
    density_empirical,
    density_empirical_cone,
    density_fundamental,
    density_restricted,
    iter_box,
    pull_back,
)
from .maps import LatticeMap
from .norms import Norm
from .sublattice import invariant_factors, parity_sublattice, sublattice_index, sublattice_set

__all__ = [
    "DEFAULT_BUDGET",
    "LatticeMap",
    "Norm",
    "PeriodicSetSpec",
    "Predicate",
    "density_fundamental",
    "density_empirical",
    "density_empirical_cone",
    "density_restricted",
    "pull_back",
    "iter_box",
    "sublattice_index",
    "invariant_factors",
    "sublattice_set",
    "parity_sublattice",
]
