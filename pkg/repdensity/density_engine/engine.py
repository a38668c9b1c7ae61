"""
Density engine: exact d_m for algebras, groups and the self-dual and
orthogonal subfamilies.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..exceptions import BudgetExceededError, InvalidInputError, InvariantViolationError
from ..ivpoly import period_composite, period_prime_power
from ..lattice import DEFAULT_BUDGET
from ..numeric import factorize
from ..root_systems import (
    AlgebraId,
    GroupId,
    VariantSpec,
    algebra_variant,
    group_sublattice,
    orthogonal_sublattice,
    selfdual_embedding,
)
from .cache import DensityCache
from .counting import DEFAULT_BLOCK_POINTS, count_nondivisible
from .result import ExactDensity, PrimePowerDensity
from .utils import ComputationLogger

MODES = ("product", "direct")


@dataclass(frozen=True)
class EngineOptions:
    """
    Knobs shared by every computation of an engine.

    Attributes:
        workers: Processes used by the counting kernel
        budget_points: Largest fundamental domain enumerated
        block_points: Points per vectorised step
        cache_enabled: Read and write the density cache
        cache_dir: Directory of the density cache
    """
    workers: int = 1
    budget_points: int = DEFAULT_BUDGET
    block_points: int = DEFAULT_BLOCK_POINTS
    cache_enabled: bool = False
    cache_dir: str | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise InvalidInputError(f"workers must be positive, got {self.workers}")
        if self.budget_points < 1 or self.block_points < 1:
            raise InvalidInputError("Point budgets must be positive")
        if self.cache_enabled and not self.cache_dir:
            raise InvalidInputError("cache_enabled needs a cache_dir")


@dataclass(frozen=True)
class DensityRequest:
    """d_m of an algebra, or of any variant's lattice."""
    target: AlgebraId | VariantSpec
    m: int
    mode: str = "product"

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInputError(f"m must be a positive integer, got {self.m}")
        if self.mode not in MODES:
            raise InvalidInputError(f"Unknown mode {self.mode!r}, expected one of {MODES}")

    def variant(self) -> VariantSpec:
        if isinstance(self.target, VariantSpec):
            return self.target
        return algebra_variant(self.target)


class DensityEngine:
    """
    Engine computing exact densities of representations with degree prime to m.
    """

    def __init__(self, options: EngineOptions | None = None):
        self.options = options or EngineOptions()
        self.cache = DensityCache(self.options.cache_dir) if self.options.cache_enabled else None
        self.logger = logging.getLogger(__name__)
        if self.cache is not None:
            self.logger.debug(f"Density cache {self.cache.path} holds {len(self.cache)} records")

    def density_for(self, request: DensityRequest) -> ExactDensity:
        """
        Density of the variant's weights whose degree m does not divide.

        Each prime power q of m is enumerated over its own period and the
        parts are combined as 1 - prod(1 - d_q); mode "direct" enumerates
        the composite period once instead.
        """
        variant = request.variant()
        label = variant.label
        m = request.m

        if m == 1:
            return ExactDensity(label, 1, variant.rank, Fraction(0), rule="trivial")

        if self.cache is not None and request.mode == "product":
            cached = self.cache.get(label, m)
            if cached is not None:
                return cached

        self.logger.info(f"Computing d_{m}({label}) on a rank {variant.rank} lattice")
        start = time.perf_counter()
        provenance = ComputationLogger(label)
        if request.mode == "direct":
            parts = (self._direct(variant, m, provenance),)
            value = parts[0].density
        else:
            parts = tuple(
                self._prime_power(variant, p, s, provenance) for p, s in factorize(m).factors
            )
            value = 1 - prod((1 - part.density for part in parts), start=Fraction(1))

        result = ExactDensity(
            label=label,
            m=m,
            rank=variant.rank,
            value=value,
            per_prime_power=parts,
            rule=request.mode,
            wall_time=time.perf_counter() - start,
            provenance=provenance.get_summary(),
        )
        self.logger.info(f"{result} ({result.points} points, {result.wall_time:.2f}s)")
        if self.cache is not None and request.mode == "product":
            self.cache.put(result)
        return result

    def _count(
        self, variant: VariantSpec, period: int, q: int, provenance: ComputationLogger
    ) -> PrimePowerDensity:
        f = variant.polynomial()
        points = period**f.rank
        start = time.perf_counter()
        try:
            count = count_nondivisible(
                f,
                period,
                q,
                workers=self.options.workers,
                budget=self.options.budget_points,
                block_points=self.options.block_points,
            )
        except BudgetExceededError as e:
            provenance.log_error(q, str(e), period)
            raise
        seconds = time.perf_counter() - start
        provenance.log_step(q, period, points, count, seconds)
        return PrimePowerDensity(q, Fraction(count, points), period, points, count, seconds)

    def _prime_power(
        self, variant: VariantSpec, p: int, s: int, provenance: ComputationLogger
    ) -> PrimePowerDensity:
        certificate = period_prime_power(variant.polynomial(), p, s)
        return self._count(variant, certificate.period, certificate.q, provenance)

    def _direct(
        self, variant: VariantSpec, m: int, provenance: ComputationLogger
    ) -> PrimePowerDensity:
        period = period_composite(variant.polynomial(), factorize(m))
        return self._count(variant, period, m, provenance)

    def density(
        self, target: AlgebraId | VariantSpec, m: int, mode: str = "product"
    ) -> ExactDensity:
        return self.density_for(DensityRequest(target, m, mode))

    def density_group(self, group: GroupId, m: int) -> ExactDensity:
        """
        Density over the weights of a group.

        Raises:
            InvariantViolationError: If the value exceeds |C^G| times the
                algebra's density
        """
        result = self.density(group_sublattice(group), m)
        algebra = self.density(group.algebra, m)
        ceiling = group.center_order * algebra.value
        if result.value > ceiling:
            raise InvariantViolationError(
                f"d_{m}({group.label}) = {result.value} exceeds "
                f"{group.center_order} * d_{m}({group.algebra}) = {ceiling}"
            )
        return result

    def density_selfdual(self, algebra: AlgebraId, m: int) -> ExactDensity:
        return self.density(selfdual_embedding(algebra), m)

    def density_orthogonal(self, algebra: AlgebraId, m: int) -> ExactDensity:
        """
        Density over the orthogonal weights.

        Raises:
            InvariantViolationError: If the value exceeds twice the
                self-dual density
        """
        result = self.density(orthogonal_sublattice(algebra), m)
        selfdual = self.density_selfdual(algebra, m)
        if result.value > 2 * selfdual.value:
            raise InvariantViolationError(
                f"d_{m}({result.label}) = {result.value} exceeds "
                f"2 * d_{m}({selfdual.label}) = {2 * selfdual.value}"
            )
        return result
