"""
Identifiers for the supported Lie algebras and groups.

Algebras use the matrix-size convention: gl_n, sl_n, so_{2n+1}, sp_{2n} and
so_{2n} are all indexed by n.
"""

from dataclasses import dataclass
from enum import Enum

from ..exceptions import UnsupportedVariantError


class Family(Enum):
    GL = "gl"
    SL = "sl"
    SO_ODD = "so_odd"
    SP = "sp"
    SO_EVEN = "so_even"


# smallest public n per family; so_4 is not simple and so_2 is abelian
_MIN_RANK = {
    Family.GL: 1,
    Family.SL: 2,
    Family.SO_ODD: 1,
    Family.SP: 1,
    Family.SO_EVEN: 3,
}

_CARTAN_LETTER = {
    Family.GL: "A",
    Family.SL: "A",
    Family.SO_ODD: "B",
    Family.SP: "C",
    Family.SO_EVEN: "D",
}


@dataclass(frozen=True)
class AlgebraId:
    """
    A classical Lie algebra.

    Attributes:
        family: Classical family
        n: Index in the matrix-size convention
    """
    family: Family
    n: int

    def __post_init__(self):
        minimum = _MIN_RANK[self.family]
        if not isinstance(self.n, int) or self.n < minimum:
            raise UnsupportedVariantError(
                f"{self.family.value} needs n >= {minimum}, got {self.n}"
            )

    @classmethod
    def gl(cls, n: int) -> "AlgebraId":
        return cls(Family.GL, n)

    @classmethod
    def sl(cls, n: int) -> "AlgebraId":
        return cls(Family.SL, n)

    @classmethod
    def so(cls, size: int) -> "AlgebraId":
        """so_size: B for odd size, D for even size."""
        if size % 2:
            return cls(Family.SO_ODD, (size - 1) // 2)
        return cls(Family.SO_EVEN, size // 2)

    @classmethod
    def sp(cls, size: int) -> "AlgebraId":
        if size % 2:
            raise UnsupportedVariantError(f"sp needs an even matrix size, got {size}")
        return cls(Family.SP, size // 2)

    @property
    def matrix_size(self) -> int:
        if self.family in (Family.GL, Family.SL):
            return self.n
        if self.family is Family.SO_ODD:
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def semisimple_rank(self) -> int:
        if self.family in (Family.GL, Family.SL):
            return self.n - 1
        return self.n

    @property
    def is_semisimple(self) -> bool:
        return self.family is not Family.GL

    @property
    def cartan_type(self) -> str:
        return f"{_CARTAN_LETTER[self.family]}{self.semisimple_rank}"

    @property
    def dimension(self) -> int:
        """dim of the algebra."""
        n = self.n
        return {
            Family.GL: n * n,
            Family.SL: n * n - 1,
            Family.SO_ODD: 2 * n * n + n,
            Family.SP: 2 * n * n + n,
            Family.SO_EVEN: 2 * n * n - n,
        }[self.family]

    @property
    def label(self) -> str:
        prefix = {Family.SO_ODD: "so", Family.SO_EVEN: "so"}.get(self.family, self.family.value)
        return f"{prefix}_{self.matrix_size}"

    def __str__(self) -> str:
        return self.label


class GroupKind(Enum):
    SO = "so"
    PGL = "pgl"
    SIMPLY_CONNECTED = "sc"


@dataclass(frozen=True)
class GroupId:
    """
    A connected group with the given Lie algebra.

    Attributes:
        kind: SO_N, PGL_n or the simply connected group
        algebra: Its Lie algebra
    """
    kind: GroupKind
    algebra: AlgebraId

    def __post_init__(self):
        if self.kind is GroupKind.SO and self.algebra.family not in (Family.SO_ODD, Family.SO_EVEN):
            raise UnsupportedVariantError(f"SO needs an orthogonal algebra, got {self.algebra}")
        if self.kind is GroupKind.PGL and self.algebra.family is not Family.SL:
            raise UnsupportedVariantError(f"PGL needs sl_n, got {self.algebra}")
        if not self.algebra.is_semisimple:
            raise UnsupportedVariantError(
                f"Groups are supported for semisimple algebras, got {self.algebra}"
            )

    @classmethod
    def so(cls, size: int) -> "GroupId":
        if size < 3 or size == 4:
            raise UnsupportedVariantError(f"SO_{size} is not supported")
        return cls(GroupKind.SO, AlgebraId.so(size))

    @classmethod
    def pgl(cls, n: int) -> "GroupId":
        return cls(GroupKind.PGL, AlgebraId.sl(n))

    @classmethod
    def simply_connected(cls, algebra: AlgebraId) -> "GroupId":
        return cls(GroupKind.SIMPLY_CONNECTED, algebra)

    @property
    def center_order(self) -> int:
        """|C^G|, the order of the kernel of the simply connected cover."""
        if self.kind is GroupKind.SO:
            return 2
        if self.kind is GroupKind.PGL:
            return self.algebra.n
        return 1

    @property
    def label(self) -> str:
        if self.kind is GroupKind.SO:
            return f"SO_{self.algebra.matrix_size}"
        if self.kind is GroupKind.PGL:
            return f"PGL_{self.algebra.n}"
        return f"Gsc({self.algebra.label})"

    def __str__(self) -> str:
        return self.label
