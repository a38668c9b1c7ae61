"""
Densities of subsets of Z^k: exact fundamental-domain counts for periodic
sets and ball-counting oracles for arbitrary predicates.
"""

import logging
import random
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import numpy as np

from ..exceptions import BudgetExceededError, InvalidInputError, InvariantViolationError
from .maps import LatticeMap
from .norms import Norm

logger = logging.getLogger(__name__)

# Vectorised membership test: (N, k) int64 rows -> (N,) bool
Predicate = Callable[[np.ndarray], np.ndarray]

DEFAULT_BUDGET = 10**8
DEFAULT_BLOCK_POINTS = 1 << 20


@dataclass(frozen=True)
class PeriodicSetSpec:
    """
    A subset A of Z^rank with A + period * Z^rank = A.

    Attributes:
        rank: Dimension k
        predicate: Vectorised membership test
        period: A period of the set
        name: Label for logs
    """
    rank: int
    predicate: Predicate = field(compare=False)
    period: int
    name: str = "A"

    def __post_init__(self):
        if self.period < 1:
            raise InvalidInputError(f"Period must be positive, got {self.period}")
        if self.rank < 0:
            raise InvalidInputError(f"Rank must be nonnegative, got {self.rank}")

    def contains(self, x: Sequence[int]) -> bool:
        return bool(self.predicate(np.array([x], dtype=np.int64).reshape(1, self.rank))[0])

    def translate(self, shift: Sequence[int]) -> "PeriodicSetSpec":
        """The set A + shift."""
        offset = np.array(shift, dtype=np.int64)
        return PeriodicSetSpec(
            self.rank,
            lambda points: self.predicate(points - offset),
            self.period,
            f"{self.name}+{tuple(shift)}",
        )

    def with_period(self, period: int) -> "PeriodicSetSpec":
        """Same set with a multiple of the current period."""
        if period % self.period:
            raise InvalidInputError(f"{period} is not a multiple of the period {self.period}")
        return PeriodicSetSpec(self.rank, self.predicate, period, self.name)

    def verify_period(self, samples: int = 1000, seed: int = 0, spread: int = 100) -> bool:
        """Spot-check predicate(x + period e_j) == predicate(x)."""
        if self.rank == 0:
            return True
        rng = random.Random(seed)
        points = np.array(
            [[rng.randint(-spread, spread) for _ in range(self.rank)] for _ in range(samples)],
            dtype=np.int64,
        )
        shifted = points.copy()
        directions = np.array([rng.randrange(self.rank) for _ in range(samples)])
        shifted[np.arange(samples), directions] += self.period
        return bool(np.array_equal(self.predicate(points), self.predicate(shifted)))


def iter_box(
    lows: Sequence[int], sizes: Sequence[int], block_points: int = DEFAULT_BLOCK_POINTS
) -> Iterator[np.ndarray]:
    """
    Yield the integer box prod [low_j, low_j + size_j) in lexicographic blocks.

    Consecutive blocks cover consecutive ranges of the first coordinate,
    so splitting the block list partitions by that coordinate.
    """
    total = prod(sizes)
    shape = tuple(int(s) for s in sizes)
    base = np.array(lows, dtype=np.int64)
    for start in range(0, total, block_points):
        flat = np.arange(start, min(start + block_points, total), dtype=np.int64)
        coords = np.stack(np.unravel_index(flat, shape), axis=1).astype(np.int64)
        yield coords + base


def _count_box(
    predicate: Predicate, lows: Sequence[int], sizes: Sequence[int], workers: int, block_points: int
) -> int:
    if not sizes:
        return int(np.count_nonzero(predicate(np.zeros((1, 0), dtype=np.int64))))
    blocks = iter_box(lows, sizes, block_points)
    if workers <= 1:
        return sum(int(np.count_nonzero(predicate(block))) for block in blocks)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(lambda block: int(np.count_nonzero(predicate(block))), blocks))


def _check_budget(points: int, budget: int, what: str) -> None:
    if points > budget:
        raise BudgetExceededError(points, budget, what)


def density_fundamental(
    periodic_set: PeriodicSetSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    block_points: int = DEFAULT_BLOCK_POINTS,
) -> Fraction:
    """
    Exact density of a periodic set: its share of the box {0, ..., period-1}^rank.

    Raises:
        BudgetExceededError: If period^rank exceeds the budget
    """
    points = periodic_set.period**periodic_set.rank
    _check_budget(points, budget, "fundamental domain")
    rank = periodic_set.rank
    count = _count_box(
        periodic_set.predicate, [0] * rank, [periodic_set.period] * rank, workers, block_points
    )
    logger.debug(f"{periodic_set.name}: {count} of {points} points in the fundamental domain")
    return Fraction(count, points)


def _ball_counts(
    predicate: Predicate,
    restriction: Predicate | None,
    norm: Norm,
    radius: float,
    lattice: LatticeMap | None,
    budget: int,
    block_points: int,
) -> tuple[int, int]:
    if radius <= 0:
        raise InvalidInputError(f"Radius must be positive, got {radius}")
    embedding = lattice.linear_part().as_array() if lattice is not None else None
    rank = lattice.source_rank if lattice is not None else norm.rank
    if (lattice.target_dim if lattice is not None else rank) != norm.rank:
        raise InvalidInputError(f"Norm of rank {norm.rank} does not fit the lattice")

    widths = norm.box_half_widths(radius, embedding)
    sizes = [2 * h + 1 for h in widths]
    _check_budget(prod(sizes), budget, "ball enumeration")

    hits = total = 0
    for block in iter_box([-h for h in widths], sizes, block_points):
        image = block @ embedding.T if embedding is not None else block
        inside = norm.evaluate_array(image) < radius
        if restriction is not None:
            inside &= restriction(block)
        total += int(np.count_nonzero(inside))
        hits += int(np.count_nonzero(inside & predicate(block)))
    return hits, total


def density_empirical(
    predicate: Predicate,
    norm: Norm,
    radius: float,
    lattice: LatticeMap | None = None,
    budget: int = DEFAULT_BUDGET,
    block_points: int = DEFAULT_BLOCK_POINTS,
) -> Fraction:
    """
    #{a in A : N(a) < r} / #{v in L : N(v) < r} by direct enumeration.

    Points are enumerated in the source coordinates of ``lattice`` and the
    norm is read on their image; without a lattice both coincide.
    """
    hits, total = _ball_counts(predicate, None, norm, radius, lattice, budget, block_points)
    logger.info(f"Ball of radius {radius} under {norm.name}: {hits}/{total}")
    return Fraction(hits, total)


def density_empirical_cone(
    predicate: Predicate,
    dominance: Predicate,
    norm: Norm,
    radius: float,
    lattice: LatticeMap | None = None,
    budget: int = DEFAULT_BUDGET,
    block_points: int = DEFAULT_BLOCK_POINTS,
) -> Fraction:
    """As density_empirical with both counts restricted to the cone."""
    hits, total = _ball_counts(predicate, dominance, norm, radius, lattice, budget, block_points)
    if total == 0:
        raise InvalidInputError(f"No cone points inside radius {radius}")
    logger.info(f"Cone ball of radius {radius} under {norm.name}: {hits}/{total}")
    return Fraction(hits, total)


def pull_back(periodic_set: PeriodicSetSpec, sublattice: LatticeMap) -> PeriodicSetSpec:
    """
    The set {y : sublattice(y) in A}.

    An integer linear map carries period translates into period translates,
    so the period of A is kept.
    """
    if sublattice.target_dim != periodic_set.rank:
        raise InvalidInputError(
            f"Sublattice lands in dimension {sublattice.target_dim}, "
            f"set has rank {periodic_set.rank}"
        )
    return PeriodicSetSpec(
        sublattice.source_rank,
        lambda points: periodic_set.predicate(sublattice.apply_array(points)),
        periodic_set.period,
        f"{periodic_set.name}|L'",
    )


def density_restricted(
    periodic_set: PeriodicSetSpec,
    sublattice: LatticeMap,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> Fraction:
    """
    Exact density of A intersected with L' inside L'.

    For a square sublattice the result is checked against
    [L : L'] * density(A | L).

    Raises:
        InvariantViolationError: If the sublattice inequality fails
    """
    restricted = density_fundamental(pull_back(periodic_set, sublattice), budget, workers)
    if sublattice.is_square and not any(sublattice.offset):
        ambient = density_fundamental(periodic_set, budget, workers)
        index = sublattice.index()
        if restricted > index * ambient:
            raise InvariantViolationError(
                f"Restricted density {restricted} exceeds [L:L']={index} times {ambient}"
            )
    return restricted
