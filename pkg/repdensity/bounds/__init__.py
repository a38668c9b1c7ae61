"""
Closed-form bounds on the densities and the checker that compares
computed densities with them.
"""

from .exponential import (
    ExpBound,
    algebra_bound,
    bound_classical,
    bound_gl,
    bound_group,
    bound_selfdual,
    exp_lower,
    exp_upper,
    lower_bound_permutations,
    omega,
    union_bound,
    vandermonde_tail,
)
from .report import BoundChecker, BoundReport

__all__ = [
    "ExpBound",
    "exp_upper",
    "exp_lower",
    "omega",
    "bound_gl",
    "bound_classical",
    "algebra_bound",
    "bound_selfdual",
    "bound_group",
    "vandermonde_tail",
    "union_bound",
    "lower_bound_permutations",
    "BoundChecker",
    "BoundReport",
]
