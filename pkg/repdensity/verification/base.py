"""Minimal base class for verification suites."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from ..density_engine import DensityEngine


@dataclass(frozen=True)
class VerifyOptions:
    """
    Settings shared by the suites.

    Attributes:
        samples: Random points per sampled property
        seed: Seed of every sampler
        counterexample_radius: Radius of the two-norm counterexample
        cone_multipliers: Cone radii as multiples of the period
    """
    samples: int = 10_000
    seed: int = 0
    counterexample_radius: int = 1000
    cone_multipliers: tuple[int, ...] = (5, 10, 25, 50)


@dataclass
class CheckResult:
    """Outcome of one property check"""
    name: str
    passed: bool
    detail: str = ""
    witness: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witness": self.witness,
        }


@dataclass
class SuiteReport:
    """All checks of one suite run"""
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [check.to_dict() for check in self.failures()],
        }


class BaseSuite(ABC):
    """Simple abstract base for all verification suites."""

    name: str = ""

    def __init__(self):
        self.options = VerifyOptions()
        self.engine = DensityEngine()
        self.report = SuiteReport(self.name)
        self.logger = logging.getLogger(f"repdensity.verification.{self.name}")

    def setup(self, options: VerifyOptions, engine: DensityEngine) -> "BaseSuite":
        """
        Set up the suite context.

        Args:
            options: Sample sizes, seeds and radii
            engine: Engine used for exact densities

        Returns:
            Self for chaining
        """
        self.options = options
        self.engine = engine
        self.report = SuiteReport(self.name)
        return self

    def check(self, name: str, passed: bool, detail: str = "", witness: str | None = None) -> bool:
        """Record a check; failures are logged with their witness."""
        self.report.checks.append(CheckResult(name, passed, detail, witness))
        if passed:
            self.logger.info(f"{name}: ok {detail}".rstrip())
        else:
            self.logger.error(f"{name}: FAILED {detail} witness={witness}")
        return passed

    @abstractmethod
    def run(self) -> SuiteReport:
        """
        Run every check of the suite.

        Returns:
            Report with one entry per check
        """
        pass
