"""
Weyl dimension formula as a factored polynomial in enumeration coordinates.
"""

from collections.abc import Sequence
from fractions import Fraction
from math import prod

from ..exceptions import IntegralityError
from ..ivpoly import FactoredPolynomial, LinearForm
from ..lattice import LatticeMap
from .datum import RootDatum


def _forms(
    datum: RootDatum, embedding: LatticeMap | None, include_rho: bool
) -> tuple[LinearForm, ...]:
    weights = datum.weight_basis if embedding is None else datum.weight_basis.compose(embedding)
    columns = weights.columns()
    forms = []
    for coroot in datum.coroots:
        coefficients = tuple(datum.pairing(column, coroot) for column in columns)
        constant = datum.pairing(weights.offset, coroot)
        if include_rho:
            constant += datum.pairing(datum.rho_doubled, coroot)
        forms.append(LinearForm(coefficients, constant))
    return tuple(forms)


def dimension_polynomial(
    datum: RootDatum, embedding: LatticeMap | None = None
) -> FactoredPolynomial:
    """
    lambda -> prod <lambda + rho, a> / prod <rho, a> over positive coroots a.

    Args:
        datum: Root datum
        embedding: Optional map from a sublattice's coordinates into the
            enumeration coordinates of the weight lattice

    Returns:
        The degree polynomial in the sublattice's (or the lattice's) coordinates
    """
    forms = _forms(datum, embedding, include_rho=True)
    rank = embedding.source_rank if embedding is not None else datum.rank
    return FactoredPolynomial(forms, prod(datum.rho_pairings()), rank)


def shifted_polynomial(datum: RootDatum, embedding: LatticeMap | None = None) -> FactoredPolynomial:
    """lambda -> D(lambda - rho); every form becomes <lambda, a>."""
    forms = _forms(datum, embedding, include_rho=False)
    rank = embedding.source_rank if embedding is not None else datum.rank
    return FactoredPolynomial(forms, prod(datum.rho_pairings()), rank)


def weyl_dimension(datum: RootDatum, weight: Sequence[Fraction | int]) -> int:
    """
    Degree of the irreducible with the given highest weight, from the
    formula in standard coordinates.

    Raises:
        IntegralityError: If the weight is not integral for the coroots
    """
    value = Fraction(1)
    rho = [Fraction(v, 2) for v in datum.rho_doubled]
    for coroot in datum.coroots:
        shifted = sum((Fraction(w) + r) * a for w, r, a in zip(weight, rho, coroot))
        value *= shifted / sum(r * a for r, a in zip(rho, coroot))
    if value.denominator != 1:
        raise IntegralityError(f"Weyl formula gives {value} at {tuple(weight)}")
    return int(value)
