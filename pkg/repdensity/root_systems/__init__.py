"""
Root data of the classical Lie algebras, their degree polynomials, and the
sublattices that index group, self-dual and orthogonal representations.
"""

from .algebra import AlgebraId, Family, GroupId, GroupKind
from .datum import RootDatum, build_root_datum
from .polynomials import dimension_polynomial, shifted_polynomial, weyl_dimension
from .variants import (
    Parity,
    VariantKind,
    VariantSpec,
    algebra_variant,
    antidiagonal_embedding,
    group_sublattice,
    orthogonal_form,
    orthogonal_parity,
    orthogonal_sublattice,
    selfdual_embedding,
)

__all__ = [
    "AlgebraId",
    "Family",
    "GroupId",
    "GroupKind",
    "RootDatum",
    "build_root_datum",
    "dimension_polynomial",
    "shifted_polynomial",
    "weyl_dimension",
    "Parity",
    "VariantKind",
    "VariantSpec",
    "algebra_variant",
    "antidiagonal_embedding",
    "group_sublattice",
    "orthogonal_form",
    "orthogonal_parity",
    "orthogonal_sublattice",
    "selfdual_embedding",
]
