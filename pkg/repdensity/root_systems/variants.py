"""
Sublattices of the weight lattice that index the representations of a
group, the self-dual representations and the orthogonal ones.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..exceptions import InvariantViolationError, UnsupportedVariantError
from ..ivpoly import FactoredPolynomial
from ..lattice import LatticeMap, parity_sublattice
from .algebra import AlgebraId, Family, GroupId, GroupKind
from .datum import RootDatum, build_root_datum
from .polynomials import dimension_polynomial

logger = logging.getLogger(__name__)


class VariantKind(Enum):
    ALGEBRA = "algebra"
    GROUP = "group"
    SELF_DUAL = "sd"
    ORTHOGONAL = "orth"


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class VariantSpec:
    """
    A family of representations indexed by a sublattice of the weight lattice.

    Attributes:
        kind: Which family of representations
        datum: Root datum of the Lie algebra
        sublattice: Map from the variant's coordinates into the enumeration
            coordinates of the weight lattice
        group: The group for GROUP variants
    """
    kind: VariantKind
    datum: RootDatum
    sublattice: LatticeMap
    group: GroupId | None = None

    @property
    def algebra(self) -> AlgebraId:
        assert self.datum.algebra is not None
        return self.datum.algebra

    @property
    def rank(self) -> int:
        return self.sublattice.source_rank

    @property
    def embedding(self) -> LatticeMap:
        """Variant coordinates -> doubled standard coordinates."""
        return self.datum.weight_basis.compose(self.sublattice)

    @property
    def label(self) -> str:
        if self.kind is VariantKind.GROUP:
            assert self.group is not None
            return self.group.label
        if self.kind is VariantKind.ALGEBRA:
            return self.datum.label
        return f"{self.kind.value}({self.datum.label})"

    def index(self) -> int | None:
        """Index in the weight lattice, when the sublattice has full rank."""
        return self.sublattice.index() if self.sublattice.is_square else None

    def polynomial(self) -> FactoredPolynomial:
        return dimension_polynomial(self.datum, self.sublattice)

    def __str__(self) -> str:
        return self.label


def algebra_variant(algebra: AlgebraId) -> VariantSpec:
    datum = build_root_datum(algebra)
    return VariantSpec(VariantKind.ALGEBRA, datum, LatticeMap.identity(datum.rank))


def _sublattice_from_weights(
    datum: RootDatum, generators: Sequence[Sequence[Fraction | int]]
) -> LatticeMap:
    columns = [datum.coordinates_of(weight) for weight in generators]
    return LatticeMap.from_columns(columns, datum.rank)


def group_sublattice(group: GroupId) -> VariantSpec:
    """
    Weights vanishing on the kernel of the simply connected cover.

    Raises:
        InvariantViolationError: If the index differs from |C^G|
    """
    datum = build_root_datum(group.algebra)
    d = datum.dimension
    if group.kind is GroupKind.SIMPLY_CONNECTED:
        sublattice = LatticeMap.identity(datum.rank)
    elif group.kind is GroupKind.SO:
        # integral standard coordinates: the spin weights drop out
        sublattice = _sublattice_from_weights(datum, [_unit(d, i) for i in range(d)])
    else:
        # root lattice of sl_n, representatives with last coordinate 0
        n = group.algebra.n
        generators = [_unit(d, i, 1, i + 1, -1) for i in range(n - 2)] + [_unit(d, n - 2, n)]
        sublattice = _sublattice_from_weights(datum, generators)

    index = sublattice.index()
    if index != group.center_order:
        raise InvariantViolationError(
            f"{group.label}: index {index} differs from |C^G| = {group.center_order}"
        )
    logger.debug(f"{group.label}: sublattice of index {index}")
    return VariantSpec(VariantKind.GROUP, datum, sublattice, group)


def antidiagonal_embedding(n: int) -> LatticeMap:
    """
    (x_1..x_k) -> (x_1..x_k, [0,] -x_k..-x_1) in gl_n coordinates, k = n // 2.

    For odd n this is an isomorphism onto the self-dual weights of sl_n;
    for even n its image has index 2 there.
    """
    k = n // 2
    rows = [[0] * k for _ in range(n)]
    for i in range(k):
        rows[i][i] = 1
        rows[n - 1 - i][i] = -1
    return LatticeMap.from_matrix(rows)


def _sl_selfdual_generators(n: int) -> list[list[int]]:
    k = n // 2
    if n % 2:
        return [list(column) for column in antidiagonal_embedding(n).columns()]
    # e_1+..+e_k and e_i - e_{n+1-i}; every self-dual weight has
    # lambda_i + lambda_{n+1-i} constant, the constant being free
    first = [1] * k + [0] * k
    generators = [first]
    for i in range(1, k):
        generators.append(_unit(n, i, 1, n - 1 - i, -1))
    return generators


def selfdual_embedding(algebra: AlgebraId) -> VariantSpec:
    """
    The lattice {lambda : w0 lambda = -lambda} as a VariantSpec.

    Raises:
        UnsupportedVariantError: For gl_n, which is not semisimple
    """
    if not algebra.is_semisimple:
        raise UnsupportedVariantError(f"Self-dual weights need a semisimple algebra, got {algebra}")
    datum = build_root_datum(algebra)
    d = datum.dimension
    if algebra.family is Family.SL:
        sublattice = _sublattice_from_weights(datum, _sl_selfdual_generators(algebra.n))
    elif algebra.family is Family.SO_EVEN and algebra.n % 2:
        sublattice = _sublattice_from_weights(datum, [_unit(d, i) for i in range(d - 1)])
    else:
        # w0 = -1
        sublattice = LatticeMap.identity(datum.rank)

    variant = VariantSpec(VariantKind.SELF_DUAL, datum, sublattice)
    for column in variant.embedding.columns():
        if not datum.is_selfdual(column):
            raise InvariantViolationError(f"{variant.label}: generator {column} is not self-dual")
    return variant


def orthogonal_form(variant: VariantSpec) -> list[int]:
    """Coefficients of y -> <lambda(y), 2 rho_check> on the variant's coordinates."""
    datum = variant.datum
    return [datum.pairing(column, datum.two_rho_check) for column in variant.embedding.columns()]


def orthogonal_sublattice(algebra: AlgebraId) -> VariantSpec:
    """Self-dual weights with <lambda, 2 rho_check> even."""
    selfdual = selfdual_embedding(algebra)
    parity = parity_sublattice(orthogonal_form(selfdual))
    return VariantSpec(VariantKind.ORTHOGONAL, selfdual.datum, selfdual.sublattice.compose(parity))


def orthogonal_parity(datum: RootDatum, weight: Sequence[int]) -> Parity:
    """Parity of <lambda, 2 rho_check> for lambda in enumeration coordinates."""
    value = datum.pairing(datum.weight_basis.apply(weight), datum.two_rho_check)
    return Parity.EVEN if value % 2 == 0 else Parity.ODD


def _unit(d: int, i: int, value: int = 1, j: int | None = None, other: int = 0) -> list[int]:
    v = [0] * d
    v[i] = value
    if j is not None:
        v[j] = other
    return v
