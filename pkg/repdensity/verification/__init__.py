"""
Verification suites: property oracles for the polynomials, the lattice
densities and the engine, selectable by name.
"""

from ..density_engine import DensityEngine
from ..exceptions import InvalidInputError
from .base import BaseSuite, CheckResult, SuiteReport, VerifyOptions
from .engine_suites import IsomorphismsSuite, ProductRuleSuite
from .lattice_suites import ConeSuite, CounterexampleSuite, NormsSuite
from .polynomial_suites import FraySuite, PeriodsSuite

SUITES: dict[str, type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        PeriodsSuite,
        NormsSuite,
        ProductRuleSuite,
        ConeSuite,
        CounterexampleSuite,
        IsomorphismsSuite,
        FraySuite,
    )
}


def get_suite(name: str) -> BaseSuite:
    """Instantiate a suite by name."""
    if name not in SUITES:
        raise InvalidInputError(f"Unknown suite {name!r}, expected one of {sorted(SUITES)}")
    return SUITES[name]()


def run_suites(
    names: list[str],
    options: VerifyOptions | None = None,
    engine: DensityEngine | None = None,
) -> list[SuiteReport]:
    """Run the named suites in order, sharing one engine."""
    options = options or VerifyOptions()
    engine = engine or DensityEngine()
    return [get_suite(name).setup(options, engine).run() for name in names]


__all__ = [
    "SUITES",
    "BaseSuite",
    "CheckResult",
    "SuiteReport",
    "VerifyOptions",
    "ConeSuite",
    "CounterexampleSuite",
    "FraySuite",
    "IsomorphismsSuite",
    "NormsSuite",
    "PeriodsSuite",
    "ProductRuleSuite",
    "get_suite",
    "run_suites",
]
