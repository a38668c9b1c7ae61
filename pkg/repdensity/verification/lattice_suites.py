"""Lattice suites: norm independence, the two-norm counterexample, cone densities."""

from fractions import Fraction

import numpy as np

from ..density_engine import nondivisible_predicate
from ..ivpoly import period_composite
from ..lattice import (
    Norm,
    PeriodicSetSpec,
    density_empirical,
    density_empirical_cone,
    density_fundamental,
    sublattice_set,
)
from ..numeric import factorize
from ..root_systems import AlgebraId, build_root_datum, dimension_polynomial
from .base import BaseSuite, SuiteReport

SHEAR = [[1, 0], [1, 1]]


def same_sign(points: np.ndarray) -> np.ndarray:
    return points[:, 0] * points[:, 1] >= 0


def norms() -> list[Norm]:
    return [Norm.sup(2), Norm.sheared(SHEAR, "N1"), Norm.sheared([[2, 1], [1, 1]], "N2")]


def periodic_sets() -> list[PeriodicSetSpec]:
    gl2 = dimension_polynomial(build_root_datum(AlgebraId.gl(2)))
    return [
        PeriodicSetSpec(
            2, lambda points: (points[:, 0] - points[:, 1]) % 3 != 0, 3, "x != y mod 3"
        ),
        sublattice_set([[2, 1], [0, 3]]),
        PeriodicSetSpec(2, nondivisible_predicate(gl2, 5), 5, "5 does not divide dim gl_2"),
    ]


class NormsSuite(BaseSuite):
    """Densities of periodic sets agree under every norm."""

    name = "norms"
    tolerance = Fraction(2, 100)

    def run(self) -> SuiteReport:
        radius = max(self.options.counterexample_radius // 2, 10)
        for periodic_set in periodic_sets():
            exact = density_fundamental(periodic_set)
            for norm in norms():
                empirical = density_empirical(periodic_set.predicate, norm, radius)
                self.check(
                    f"{periodic_set.name} under {norm.name}",
                    abs(empirical - exact) <= self.tolerance * exact,
                    f"{float(empirical):.5f} vs {exact} at r={radius}",
                    witness=str(empirical),
                )
        return self.report


class CounterexampleSuite(BaseSuite):
    """
    {xy >= 0} is not periodic and its density depends on the norm:
    1/2 under max(|x|, |y|) and 1/4 under max(|x|, |x + y|).
    """

    name = "counterexample"
    tolerance = Fraction(1, 100)

    def run(self) -> SuiteReport:
        final = self.options.counterexample_radius
        radii = sorted({max(final // 10, 1), max(final // 2, 1), final})
        targets = [(Norm.sup(2), Fraction(1, 2)), (Norm.sheared(SHEAR, "N1"), Fraction(1, 4))]
        for norm, target in targets:
            values = [density_empirical(same_sign, norm, r) for r in radii]
            trail = ", ".join(f"r={r}: {float(v):.5f}" for r, v in zip(radii, values))
            self.check(
                f"same sign under {norm.name}",
                abs(values[-1] - target) <= self.tolerance * target,
                f"target {target}; {trail}",
                witness=str(values[-1]),
            )
        return self.report


class ConeSuite(BaseSuite):
    """Densities restricted to the dominant cone approach the lattice density."""

    name = "cone"
    tolerance = Fraction(1, 10)
    m = 2

    def algebras(self) -> list[AlgebraId]:
        return [AlgebraId.gl(2), AlgebraId.gl(3)]

    def run(self) -> SuiteReport:
        for algebra in self.algebras():
            datum = build_root_datum(algebra)
            f = dimension_polynomial(datum)
            exact = self.engine.density(algebra, self.m).value
            period = period_composite(f, factorize(self.m))
            predicate = nondivisible_predicate(f, self.m)
            norm = Norm.sup(datum.rank)

            radii = [k * period for k in self.options.cone_multipliers]
            gaps = [
                abs(density_empirical_cone(predicate, datum.dominance_predicate(), norm, r) - exact)
                for r in radii
            ]
            shrinking = sum(1 for a, b in zip(gaps, gaps[1:]) if b < a)
            trail = ", ".join(f"r={r}: {float(g):.5f}" for r, g in zip(radii, gaps))
            self.check(
                f"cone {algebra} m={self.m}",
                gaps[-1] <= self.tolerance * exact and shrinking >= len(gaps) - 2,
                f"exact {exact}; gaps {trail}",
                witness=str(gaps[-1]),
            )
        return self.report
