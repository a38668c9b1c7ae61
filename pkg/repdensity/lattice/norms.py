"""
Sup-type norms: v -> max_i |(T v)_i| for an invertible integer matrix T.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import ceil

import numpy as np
from sympy import Matrix

from ..exceptions import InvalidInputError, SingularMatrixError


@dataclass(frozen=True)
class Norm:
    """
    Sup-norm, optionally after an integer change of coordinates.

    Attributes:
        rank: Dimension of the space the norm lives on
        change_of_basis: Invertible rank x rank integer matrix T, None for identity
        name: Label used in reports
    """
    rank: int
    change_of_basis: tuple[tuple[int, ...], ...] | None = None
    name: str = "sup"

    def __post_init__(self):
        if self.change_of_basis is None:
            return
        t = Matrix(self.change_of_basis)
        if t.shape != (self.rank, self.rank):
            raise InvalidInputError(
                f"Change of basis must be {self.rank}x{self.rank}, got {t.shape}"
            )
        if t.det() == 0:
            raise SingularMatrixError("Change of basis must be invertible")

    @classmethod
    def sup(cls, rank: int) -> "Norm":
        return cls(rank)

    @classmethod
    def sheared(cls, matrix: Sequence[Sequence[int]], name: str = "sheared") -> "Norm":
        rows = tuple(tuple(int(v) for v in row) for row in matrix)
        return cls(len(rows), rows, name)

    def _transform(self) -> np.ndarray:
        if self.change_of_basis is None:
            return np.eye(self.rank, dtype=np.int64)
        return np.array(self.change_of_basis, dtype=np.int64)

    def __call__(self, v: Sequence[int]) -> int:
        return int(self.evaluate_array(np.array([v], dtype=np.int64))[0])

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        """Norm of every row of an (N, rank) array."""
        if points.shape[1] == 0:
            return np.zeros(points.shape[0], dtype=np.int64)
        return np.abs(points @ self._transform().T).max(axis=1)

    def box_half_widths(self, radius: float, embedding: np.ndarray | None = None) -> list[int]:
        """
        Half-widths h with {y : N(E y) < radius} inside the box |y_j| <= h_j.

        Args:
            radius: Ball radius
            embedding: Optional integer matrix E with full column rank; the
                norm is then read on E y
        """
        if self.change_of_basis is not None:
            t = Matrix(self.change_of_basis)
        else:
            t = Matrix.eye(self.rank)
        if embedding is not None:
            t = t * Matrix(embedding.tolist())
        # any left inverse recovers y from T E y
        left_inverse = (t.T * t).inv() * t.T
        row_sums = [
            sum(abs(left_inverse[j, i]) for i in range(left_inverse.cols))
            for j in range(left_inverse.rows)
        ]
        return [int(ceil(float(total * radius))) for total in row_sums]
