"""
Injective integer affine maps between lattices.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from sympy import Matrix

from ..exceptions import InvalidInputError, SingularMatrixError


@dataclass(frozen=True)
class LatticeMap:
    """
    y -> matrix @ y + offset, from Z^k into a target with n coordinates.

    Targets with half-integral coordinates are stored doubled; ``scale``
    records that factor so callers can halve when reading values.

    Attributes:
        matrix: n x k integer matrix, rows indexed by target coordinates
        offset: Target vector of length n
        scale: 1 for plain coordinates, 2 for doubled coordinates
    """
    matrix: tuple[tuple[int, ...], ...]
    offset: tuple[int, ...]
    scale: int = 1

    def __post_init__(self):
        if self.scale not in (1, 2):
            raise InvalidInputError(f"scale must be 1 or 2, got {self.scale}")
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise InvalidInputError(f"Ragged matrix: row widths {sorted(widths)}")
        if len(self.offset) != len(self.matrix):
            raise InvalidInputError(
                f"Offset has length {len(self.offset)}, target dimension is {len(self.matrix)}"
            )
        if self.source_rank and Matrix(self.matrix).rank() != self.source_rank:
            raise SingularMatrixError(
                f"Map is not injective: rank {Matrix(self.matrix).rank()} < {self.source_rank}"
            )

    @classmethod
    def from_matrix(
        cls,
        matrix: Sequence[Sequence[int]],
        offset: Sequence[int] | None = None,
        scale: int = 1,
    ) -> "LatticeMap":
        rows = tuple(tuple(int(v) for v in row) for row in matrix)
        shift = tuple(int(v) for v in offset) if offset is not None else (0,) * len(rows)
        return cls(rows, shift, scale)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], target_dim: int, scale: int = 1
    ) -> "LatticeMap":
        """Map sending e_j to the j-th given vector."""
        rows = [[int(columns[j][i]) for j in range(len(columns))] for i in range(target_dim)]
        return cls.from_matrix(rows, scale=scale)

    @classmethod
    def identity(cls, k: int) -> "LatticeMap":
        return cls.from_matrix([[int(i == j) for j in range(k)] for i in range(k)])

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    @property
    def is_square(self) -> bool:
        return self.source_rank == self.target_dim

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.matrix) for j in range(self.source_rank)]

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.target_dim, self.source_rank)

    def apply(self, y: Sequence[int]) -> tuple[int, ...]:
        if len(y) != self.source_rank:
            raise InvalidInputError(f"Expected a vector of length {self.source_rank}, got {len(y)}")
        return tuple(
            sum(a * b for a, b in zip(row, y)) + c for row, c in zip(self.matrix, self.offset)
        )

    def apply_array(self, points: np.ndarray) -> np.ndarray:
        """Row-wise image of an (N, k) integer array."""
        return points @ self.as_array().T + np.array(self.offset, dtype=np.int64)

    def compose(self, inner: "LatticeMap") -> "LatticeMap":
        """self after inner; inner must use plain coordinates."""
        if inner.scale != 1:
            raise InvalidInputError("Inner map of a composition must use plain coordinates")
        if inner.target_dim != self.source_rank:
            raise InvalidInputError(
                f"Cannot compose: inner lands in dimension {inner.target_dim}, "
                f"outer expects {self.source_rank}"
            )
        product = Matrix(self.matrix) * Matrix(inner.matrix) if inner.source_rank else None
        rows = (
            [[int(product[i, j]) for j in range(inner.source_rank)] for i in range(self.target_dim)]
            if product is not None
            else [[] for _ in range(self.target_dim)]
        )
        return LatticeMap.from_matrix(rows, self.apply(inner.offset), self.scale)

    def linear_part(self) -> "LatticeMap":
        return LatticeMap(self.matrix, (0,) * self.target_dim, self.scale)

    def index(self) -> int:
        """[target : image] for a square map in plain coordinates."""
        if not self.is_square:
            raise InvalidInputError("Index is defined for square maps only")
        return abs(int(Matrix(self.matrix).det()))
