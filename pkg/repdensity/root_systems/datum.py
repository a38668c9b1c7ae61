"""
Root data of the classical families in standard coordinates.

Weights are stored doubled (2*lambda as integers) so the spin weights of
types B and D stay integral. Coroots are plain integer vectors, so a pairing
<lambda, a> is (2*lambda . a) / 2.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import Matrix

from ..exceptions import InvalidInputError
from ..lattice import LatticeMap, Predicate
from .algebra import AlgebraId, Family

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootDatum:
    """
    Positive coroots, rho, w0 and a weight-lattice basis.

    Attributes:
        algebra: The algebra described; None only for internal helpers
        family: Classical family
        n: Index of the family
        dimension: Number of standard coordinates
        coroots: Positive coroots as integer vectors
        rho_doubled: 2*rho
        two_rho_check: Sum of the positive coroots
        w0_permutation: (w0 v)_i = w0_signs[i] * v[w0_permutation[i]]
        w0_signs: Signs of the signed permutation w0
        weight_basis: Enumeration coordinates -> doubled standard coordinates
    """
    algebra: AlgebraId | None
    family: Family
    n: int
    dimension: int
    coroots: tuple[tuple[int, ...], ...]
    rho_doubled: tuple[int, ...]
    two_rho_check: tuple[int, ...]
    w0_permutation: tuple[int, ...]
    w0_signs: tuple[int, ...]
    weight_basis: LatticeMap

    @property
    def rank(self) -> int:
        """Rank of the weight lattice, i.e. of the enumeration coordinates."""
        return self.weight_basis.source_rank

    @property
    def positive_root_count(self) -> int:
        return len(self.coroots)

    @property
    def label(self) -> str:
        if self.algebra is not None:
            return self.algebra.label
        return f"{self.family.value}({self.n})"

    @staticmethod
    def pairing(doubled: Sequence[int], coroot: Sequence[int]) -> int:
        total = sum(a * b for a, b in zip(doubled, coroot))
        if total % 2:
            raise InvalidInputError(
                f"Half-integral pairing of {tuple(doubled)}/2 with {tuple(coroot)}"
            )
        return total // 2

    def rho_pairings(self) -> list[int]:
        return [self.pairing(self.rho_doubled, a) for a in self.coroots]

    def normalize(self, doubled: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative; sl_n weights are taken with last coordinate 0."""
        if self.family is Family.SL:
            last = doubled[-1]
            return tuple(v - last for v in doubled)
        return tuple(doubled)

    def apply_w0(self, vector: Sequence[int]) -> tuple[int, ...]:
        return tuple(sign * vector[j] for j, sign in zip(self.w0_permutation, self.w0_signs))

    def is_selfdual(self, doubled: Sequence[int]) -> bool:
        """w0 lambda == -lambda."""
        return self.normalize(self.apply_w0(doubled)) == self.normalize([-v for v in doubled])

    def to_standard(self, y: Sequence[int]) -> tuple[Fraction, ...]:
        """Enumeration coordinates -> standard coordinates."""
        return tuple(Fraction(v, 2) for v in self.weight_basis.apply(y))

    def coordinates_of(self, weight: Sequence[Fraction | int]) -> tuple[int, ...]:
        """
        Standard coordinates -> enumeration coordinates.

        Raises:
            InvalidInputError: If the vector is not in the weight lattice
        """
        if len(weight) != self.dimension:
            raise InvalidInputError(f"Expected {self.dimension} coordinates, got {len(weight)}")
        doubled = [2 * Fraction(v) for v in weight]
        if any(v.denominator != 1 for v in doubled):
            raise InvalidInputError(f"{tuple(weight)} is not in the weight lattice of {self.label}")
        target = Matrix(self.normalize([int(v) for v in doubled]))
        basis = Matrix(self.weight_basis.matrix)
        solution = (basis.T * basis).inv() * basis.T * target
        if any(not v.is_integer for v in solution) or basis * solution != target:
            raise InvalidInputError(f"{tuple(weight)} is not in the weight lattice of {self.label}")
        return tuple(int(v) for v in solution)

    def is_dominant(self, doubled: Sequence[int]) -> bool:
        return bool(self._dominant_rows(np.array([self.normalize(doubled)], dtype=np.int64))[0])

    def dominance_predicate(self) -> Predicate:
        """Vectorised dominance test in enumeration coordinates."""
        basis = self.weight_basis.as_array()
        return lambda points: self._dominant_rows(points @ basis.T)

    def _dominant_rows(self, doubled: np.ndarray) -> np.ndarray:
        dominant = np.ones(doubled.shape[0], dtype=bool)
        d = self.dimension
        if self.family is Family.SO_EVEN:
            for i in range(d - 2):
                dominant &= doubled[:, i] >= doubled[:, i + 1]
            if d >= 2:
                dominant &= doubled[:, d - 2] >= np.abs(doubled[:, d - 1])
            return dominant
        for i in range(d - 1):
            dominant &= doubled[:, i] >= doubled[:, i + 1]
        if self.family is not Family.SL:
            dominant &= doubled[:, d - 1] >= 0
        return dominant


def _unit(d: int, i: int, value: int = 1) -> list[int]:
    v = [0] * d
    v[i] = value
    return v


def _type_a_coroots(d: int) -> list[list[int]]:
    coroots = []
    for i in range(d):
        for j in range(i + 1, d):
            v = [0] * d
            v[i], v[j] = 1, -1
            coroots.append(v)
    return coroots


def _plus_minus_coroots(d: int) -> list[list[int]]:
    coroots = []
    for i in range(d):
        for j in range(i + 1, d):
            minus = [0] * d
            minus[i], minus[j] = 1, -1
            plus = [0] * d
            plus[i], plus[j] = 1, 1
            coroots.extend([minus, plus])
    return coroots


def _build(family: Family, n: int, algebra: AlgebraId | None) -> RootDatum:
    if family in (Family.GL, Family.SL):
        d = n
        coroots = _type_a_coroots(d)
        rho = [2 * (d - 1 - i) for i in range(d)]
        permutation = list(range(d - 1, -1, -1))
        signs = [1] * d
        columns = [_unit(d, i, 2) for i in range(d if family is Family.GL else d - 1)]
    else:
        d = n
        coroots = _plus_minus_coroots(d)
        if family is Family.SO_ODD:
            coroots += [_unit(d, i, 2) for i in range(d)]
            rho = [2 * (d - i) - 1 for i in range(d)]
        elif family is Family.SP:
            coroots += [_unit(d, i) for i in range(d)]
            rho = [2 * (d - i) for i in range(d)]
        else:
            rho = [2 * (d - 1 - i) for i in range(d)]
        permutation = list(range(d))
        signs = [-1] * d
        if family is Family.SO_EVEN and n % 2:
            signs[-1] = 1
        if family is Family.SP:
            columns = [_unit(d, i, 2) for i in range(d)]
        else:
            # spin vector (1/2, ..., 1/2) replaces e_n
            columns = [_unit(d, i, 2) for i in range(d - 1)] + [[1] * d]

    two_rho_check = [sum(a[i] for a in coroots) for i in range(d)]
    datum = RootDatum(
        algebra=algebra,
        family=family,
        n=n,
        dimension=d,
        coroots=tuple(tuple(a) for a in coroots),
        rho_doubled=tuple(rho),
        two_rho_check=tuple(two_rho_check),
        w0_permutation=tuple(permutation),
        w0_signs=tuple(signs),
        weight_basis=LatticeMap.from_columns(columns, d, scale=2),
    )
    logger.debug(
        f"Built root datum {datum.label}: "
        f"{datum.positive_root_count} positive coroots, rank {datum.rank}"
    )
    return datum


def build_root_datum(algebra: AlgebraId) -> RootDatum:
    """Root datum of a supported algebra."""
    return _build(algebra.family, algebra.n, algebra)


def _so4_datum() -> RootDatum:
    """D_2, kept out of the public surface since so_4 = sl_2 x sl_2."""
    return _build(Family.SO_EVEN, 2, None)
