"""
Full-rank sublattices: index, invariant factors and membership.
"""

from collections.abc import Sequence

import numpy as np
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form

from ..exceptions import InvalidInputError, SingularMatrixError
from .density import PeriodicSetSpec
from .maps import LatticeMap


def _square(matrix: Sequence[Sequence[int]]) -> Matrix:
    m = Matrix(matrix)
    if m.rows != m.cols:
        raise InvalidInputError(f"Expected a square matrix, got {m.shape}")
    if m.det() == 0:
        raise SingularMatrixError("Sublattice basis is singular")
    return m


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal a_1 | a_2 | ... | a_n of the Smith normal form."""
    m = _square(matrix)
    snf = smith_normal_form(m, domain=ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(m.rows))


def sublattice_index(matrix: Sequence[Sequence[int]]) -> int:
    """
    [L : L'] for L' spanned by the columns of matrix.

    Raises:
        SingularMatrixError: If the columns are linearly dependent
    """
    index = abs(int(_square(matrix).det()))
    # |det| and the Smith diagonal describe the same quotient
    assert index == int(np.prod(invariant_factors(matrix), dtype=object))
    return index


def sublattice_set(matrix: Sequence[Sequence[int]]) -> PeriodicSetSpec:
    """
    L' as a periodic subset of L.

    x lies in L' iff adj(M) x == 0 mod det M; the largest invariant
    factor is a period.
    """
    m = _square(matrix)
    det = int(m.det())
    adjugate = np.array(m.adjugate().tolist(), dtype=np.int64)
    period = invariant_factors(matrix)[-1]

    def member(points: np.ndarray) -> np.ndarray:
        return np.all((points @ adjugate.T) % det == 0, axis=1)

    return PeriodicSetSpec(m.rows, member, period, "L'")


def parity_sublattice(form: Sequence[int]) -> LatticeMap:
    """
    Basis of {x in Z^k : form . x even}.

    With c_j odd the vectors e_i - c_i e_j (i != j) and 2 e_j span it;
    when every coefficient is even the whole lattice qualifies.
    """
    k = len(form)
    odd = [j for j, c in enumerate(form) if c % 2]
    if not odd:
        return LatticeMap.identity(k)
    j = odd[0]
    columns = []
    for i in range(k):
        column = [0] * k
        if i == j:
            column[j] = 2
        else:
            column[i] = 1
            column[j] = -int(form[i])
        columns.append(column)
    return LatticeMap.from_columns(columns, k)
