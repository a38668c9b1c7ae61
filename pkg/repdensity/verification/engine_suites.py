"""Suites cross-checking the density engine against itself."""

from fractions import Fraction

from ..lattice import LatticeMap
from ..root_systems import AlgebraId, VariantKind, VariantSpec
from ..root_systems.datum import _so4_datum
from .base import BaseSuite, SuiteReport

ISOMORPHIC_PAIRS = [
    (AlgebraId.so(3), AlgebraId.sl(2)),
    (AlgebraId.sp(2), AlgebraId.sl(2)),
    (AlgebraId.so(5), AlgebraId.sp(4)),
    (AlgebraId.so(6), AlgebraId.sl(4)),
]


class ProductRuleSuite(BaseSuite):
    """1 - prod(1 - d_q) equals enumeration over the composite period."""

    name = "product-rule"
    cases = [(2, 6), (2, 12), (3, 6), (3, 12)]

    def run(self) -> SuiteReport:
        for n, m in self.cases:
            algebra = AlgebraId.gl(n)
            product = self.engine.density(algebra, m).value
            direct = self.engine.density(algebra, m, mode="direct").value
            self.check(
                f"product rule {algebra} m={m}",
                product == direct,
                f"{product} vs {direct}",
                witness=f"product={product}, direct={direct}",
            )
        return self.report


class IsomorphismsSuite(BaseSuite):
    """Isomorphic low-rank algebras have equal densities."""

    name = "isomorphisms"
    moduli = (2, 3)

    def run(self) -> SuiteReport:
        for left, right in ISOMORPHIC_PAIRS:
            for m in self.moduli:
                a = self.engine.density(left, m).value
                b = self.engine.density(right, m).value
                self.check(f"{left} = {right} at m={m}", a == b, f"{a}", witness=f"{a} != {b}")

        so4 = VariantSpec(VariantKind.ALGEBRA, _so4_datum(), LatticeMap.identity(2))
        for p in (2, 3, 5):
            value = self.engine.density(so4, p).value
            expected = Fraction(p - 1, p) ** 2
            self.check(
                f"so_4 = sl_2 x sl_2 at m={p}",
                value == expected,
                f"{value}",
                witness=f"{value} != {expected}",
            )
        return self.report
