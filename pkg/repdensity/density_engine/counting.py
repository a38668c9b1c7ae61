"""
Vectorised count of fundamental-domain points where m does not divide a
factored polynomial.

For q = p^s, q does not divide f(x) exactly when the p-adic valuations of
the forms sum to less than T = s + v_p(denominator). Each form's valuation,
capped at T, depends only on its value mod p^T, so the kernel works on
residues and never forms the product.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..exceptions import BudgetExceededError, InvalidInputError
from ..ivpoly import FactoredPolynomial
from ..lattice import DEFAULT_BUDGET, Predicate, iter_box
from ..numeric import factorize, val

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_POINTS = 1 << 16
# residues below this use a lookup table of capped valuations
TABLE_LIMIT = 1 << 22
# residue arithmetic stays in int64 below this
INT64_LIMIT = 1 << 31


@dataclass(frozen=True)
class _Modulus:
    p: int
    threshold: int

    @property
    def modulus(self) -> int:
        return self.p**self.threshold

    @property
    def tier(self) -> str:
        if self.modulus <= TABLE_LIMIT:
            return "table"
        if self.modulus < INT64_LIMIT:
            return "int64"
        return "bigint"


@dataclass(frozen=True)
class _KernelTask:
    coefficients: tuple[tuple[int, ...], ...]
    constants: tuple[int, ...]
    moduli: tuple[_Modulus, ...]
    period: int
    rank: int
    split: int
    first_range: tuple[int, int]
    block_points: int


def _valuation_table(p: int, threshold: int) -> np.ndarray:
    table = np.zeros(p**threshold, dtype=np.int16)
    for t in range(1, threshold + 1):
        table[:: p**t] += 1
    return table


def _capped_valuations(
    residues: np.ndarray, modulus: _Modulus, table: np.ndarray | None
) -> np.ndarray:
    if table is not None:
        return table[residues]
    zero = residues == 0
    remaining = residues.copy()
    valuations = np.zeros(residues.shape, dtype=np.int16)
    for _ in range(modulus.threshold):
        divisible = (remaining % modulus.p == 0) & ~zero
        if not divisible.any():
            break
        valuations += divisible
        remaining = np.where(divisible, remaining // modulus.p, remaining)
    return np.where(zero, modulus.threshold, valuations)


def _suffix_residues(task: _KernelTask, modulus: int) -> np.ndarray:
    """Residues of the suffix part of every form over the whole suffix box."""
    suffix_rank = task.rank - task.split
    size = task.period**suffix_rank
    if suffix_rank:
        points = next(iter_box([0] * suffix_rank, [task.period] * suffix_rank, max(size, 1)))
    else:
        points = np.zeros((1, 0), dtype=np.int64)
    residues = np.zeros((points.shape[0], len(task.constants)), dtype=np.int64)
    for j in range(suffix_rank):
        column = np.array([c[task.split + j] % modulus for c in task.coefficients], dtype=np.int64)
        residues = (residues + np.outer(points[:, j], column)) % modulus
    return residues


def _count_slab(task: _KernelTask) -> int:
    """Count over prefixes whose first coordinate lies in task.first_range."""
    tables = [
        _valuation_table(m.p, m.threshold) if m.tier == "table" else None for m in task.moduli
    ]
    suffixes = [_suffix_residues(task, m.modulus) for m in task.moduli]

    start, stop = task.first_range
    if task.split:
        lows = [start] + [0] * (task.split - 1)
        sizes = [stop - start] + [task.period] * (task.split - 1)
        prefixes = iter_box(lows, sizes, task.block_points)
    else:
        prefixes = iter([np.zeros((1, 0), dtype=np.int64)])

    count = 0
    for block in prefixes:
        for prefix in block.tolist():
            alive = None
            for modulus, table, suffix in zip(task.moduli, tables, suffixes):
                shift = np.array(
                    [
                        (sum(c[j] * x for j, x in enumerate(prefix)) + const) % modulus.modulus
                        for c, const in zip(task.coefficients, task.constants)
                    ],
                    dtype=np.int64,
                )
                residues = (suffix + shift) % modulus.modulus
                valuations = _capped_valuations(residues, modulus, table)
                not_divisible = valuations.sum(axis=1, dtype=np.int64) < modulus.threshold
                alive = not_divisible if alive is None else alive | not_divisible
            count += int(np.count_nonzero(alive))
    return count


def _count_bigint(f: FactoredPolynomial, period: int, moduli: tuple[_Modulus, ...]) -> int:
    count = 0
    for block in iter_box([0] * f.rank, [period] * f.rank):
        for x in block.tolist():
            values = f.values(x)
            for modulus in moduli:
                total = 0
                for value in values:
                    if value == 0:
                        total += modulus.threshold
                    else:
                        total += min(int(val(value, modulus.p)), modulus.threshold)
                    if total >= modulus.threshold:
                        break
                if total < modulus.threshold:
                    count += 1
                    break
    return count


def nondivisible_predicate(f: FactoredPolynomial, q: int) -> Predicate:
    """Vectorised test of q not dividing f, for points with any sign."""
    moduli = tuple(_Modulus(p, s + int(val(f.denominator, p))) for p, s in factorize(q).factors)
    if any(m.tier == "bigint" for m in moduli):
        logger.warning(
            f"Residues mod {[m.modulus for m in moduli]} exceed int64; testing points one by one"
        )
        return lambda points: np.array(
            [f.eval_exact(x) % q != 0 for x in points.tolist()], dtype=bool
        )

    coefficients = np.array(
        [form.coefficients for form in f.forms], dtype=np.int64
    ).reshape(len(f.forms), f.rank)
    constants = np.array([form.constant for form in f.forms], dtype=np.int64)
    tables = [_valuation_table(m.p, m.threshold) if m.tier == "table" else None for m in moduli]

    def predicate(points: np.ndarray) -> np.ndarray:
        values = points @ coefficients.T + constants
        alive = np.zeros(points.shape[0], dtype=bool)
        for modulus, table in zip(moduli, tables):
            valuations = _capped_valuations(values % modulus.modulus, modulus, table)
            alive |= valuations.sum(axis=1, dtype=np.int64) < modulus.threshold
        return alive

    return predicate


def _split_point(rank: int, period: int, block_points: int) -> int:
    """Number of leading coordinates enumerated one prefix at a time."""
    split = rank
    while split > 0 and period ** (rank - split + 1) <= block_points:
        split -= 1
    return split


def count_nondivisible(
    f: FactoredPolynomial,
    period: int,
    q: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    block_points: int = DEFAULT_BLOCK_POINTS,
) -> int:
    """
    Number of x in {0, ..., period-1}^rank with q not dividing f(x).

    q may be composite, in which case period must be a q-period and a point
    counts when some prime-power part of q fails to divide.

    Args:
        f: Integer-valued factored polynomial
        period: A q-period of f
        q: Modulus, at least 1
        workers: Processes sharing the first coordinate
        budget: Maximum number of points
        block_points: Points handled per vectorised step

    Raises:
        BudgetExceededError: If period^rank exceeds the budget
    """
    if period < 1:
        raise InvalidInputError(f"Period must be positive, got {period}")
    points = period**f.rank
    if points > budget:
        raise BudgetExceededError(points, budget, f"count mod {q}")
    factorization = factorize(q)
    if factorization.omega == 0:
        return 0

    moduli = tuple(_Modulus(p, s + int(val(f.denominator, p))) for p, s in factorization.factors)
    if any(m.tier == "bigint" for m in moduli):
        logger.warning(
            f"Residues mod {[m.modulus for m in moduli]} exceed int64; "
            "counting with Python integers"
        )
        return _count_bigint(f, period, moduli)

    split = _split_point(f.rank, period, block_points)
    coefficients = tuple(form.coefficients for form in f.forms)
    constants = tuple(form.constant for form in f.forms)

    def task(first_range: tuple[int, int]) -> _KernelTask:
        return _KernelTask(
            coefficients, constants, moduli, period, f.rank, split, first_range, block_points
        )

    if split == 0 or workers <= 1:
        return _count_slab(task((0, period if split else 1)))

    bounds = np.linspace(0, period, min(period, 4 * workers) + 1).astype(int)
    ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(_count_slab, [task(r) for r in ranges]))
