"""
Check exact densities against the closed-form bounds that apply to them
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..density_engine import ExactDensity
from ..numeric import factorize
from ..root_systems import Family, VariantKind, VariantSpec
from .exponential import (
    ExpBound,
    algebra_bound,
    bound_gl,
    bound_group,
    bound_selfdual,
    lower_bound_permutations,
    union_bound,
    vandermonde_tail,
)


@dataclass(frozen=True)
class BoundReport:
    """
    Exact density next to its bounds.

    Attributes:
        variant: Variant label
        m: Modulus
        lower: Exact lower bound, if one applies
        upper: Upper bound c * exp(x), if one applies
        exact: The computed density, if known
        satisfied: lower <= exact <= upper on the certified side
        message: Description of a violation
    """
    variant: str
    m: int
    lower: Fraction | None
    upper: ExpBound | None
    exact: Fraction | None
    satisfied: bool
    message: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "variant": self.variant,
            "m": self.m,
            "lower": str(self.lower) if self.lower is not None else None,
            "upper": str(self.upper) if self.upper is not None else None,
            "upper_decimal": f"{float(self.upper):.6g}" if self.upper is not None else None,
            "exact": str(self.exact) if self.exact is not None else None,
            "satisfied": self.satisfied,
            "message": self.message,
        }


class BoundChecker:
    """Compare exact densities with the bounds for their variant"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def bounds_for(self, variant: VariantSpec, m: int) -> tuple[Fraction | None, ExpBound | None]:
        """
        Applicable (lower, upper) bounds for d_m of a variant.

        Args:
            variant: Algebra, group, self-dual or orthogonal variant
            m: Positive modulus

        Returns:
            Tuple of lower bound and upper bound, either may be None
        """
        if m == 1:
            # omega(1) = 0
            return None, ExpBound(0, Fraction(0))

        algebra = variant.algebra
        if variant.kind is VariantKind.GROUP:
            assert variant.group is not None
            return None, bound_group(variant.group, m)
        if variant.kind is VariantKind.SELF_DUAL:
            return None, bound_selfdual(algebra, m)
        if variant.kind is VariantKind.ORTHOGONAL:
            return None, bound_selfdual(algebra, m, orthogonal=True)

        if algebra.family in (Family.GL, Family.SL):
            n = algebra.matrix_size
            lower, upper = bound_gl(n, m)
            for p in factorize(m).primes():
                lower = max(lower, lower_bound_permutations(n, p))
            return lower, upper
        return None, algebra_bound(algebra, m)

    def check(
        self, variant: VariantSpec, result: ExactDensity | None, m: int | None = None
    ) -> BoundReport:
        """
        Check one density.

        Args:
            variant: Variant the density was computed for
            result: The density, or None to report the bounds alone
            m: Modulus when no result is given
        """
        m = result.m if result is not None else m
        if m is None:
            raise ValueError("Either a result or m is required")
        lower, upper = self.bounds_for(variant, m)
        exact = result.value if result is not None else None

        messages = []
        if exact is not None:
            if lower is not None and exact < lower:
                messages.append(f"{exact} is below the lower bound {lower}")
            if upper is not None and not upper.holds(exact):
                messages.append(f"{exact} exceeds the upper bound {upper}")

        report = BoundReport(
            variant=variant.label,
            m=m,
            lower=lower,
            upper=upper,
            exact=exact,
            satisfied=not messages,
            message="; ".join(messages) or None,
        )
        if messages:
            self.logger.error(f"Bound violated for d_{m}({variant.label}): {report.message}")
        else:
            self.logger.debug(f"Bounds hold for d_{m}({variant.label})")
        return report

    def check_union(self, variant: VariantSpec, result: ExactDensity) -> list[BoundReport]:
        """
        Per-prime-power densities of gl_n against exp(-n^2 / 4 period), and
        d_m against the sum of those bounds.
        """
        algebra = variant.algebra
        n = algebra.matrix_size
        if variant.kind is not VariantKind.ALGEBRA or algebra.family is not Family.GL or n < 2:
            return []
        if result.rule != "product" or not result.per_prime_power:
            return []

        reports = []
        for part in result.per_prime_power:
            _, bound = vandermonde_tail(part.period, n)
            satisfied = bound.holds(part.density)
            reports.append(BoundReport(
                variant=f"{variant.label} mod {part.q}",
                m=part.q,
                lower=None,
                upper=bound,
                exact=part.density,
                satisfied=satisfied,
                message=None if satisfied else f"{part.density} exceeds {bound}",
            ))

        total = union_bound([part.period for part in result.per_prime_power], n)
        satisfied = result.value <= total
        reports.append(BoundReport(
            variant=f"{variant.label} union",
            m=result.m,
            lower=None,
            upper=None,
            exact=result.value,
            satisfied=satisfied,
            message=(
                None if satisfied else f"{result.value} exceeds the union bound {float(total):.6g}"
            ),
        ))
        for report in reports:
            if not report.satisfied:
                self.logger.error(f"Union bound violated: {report.message}")
        return reports
