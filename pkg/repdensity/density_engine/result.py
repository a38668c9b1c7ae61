"""Exact density results and their record form."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any

from ..exceptions import InvariantViolationError

# bump when enumeration semantics change; cached records of other versions are ignored
ENGINE_VERSION = "1.0"


@dataclass(frozen=True)
class PrimePowerDensity:
    """
    Density of {x : q does not divide f(x)} for one prime power q.

    Attributes:
        q: Prime power (or composite modulus in direct mode)
        density: count / points, exact
        period: Period of the enumerated fundamental domain
        points: period ** rank
        count: Points where q does not divide
        seconds: Wall time of the enumeration
    """
    q: int
    density: Fraction
    period: int
    points: int
    count: int
    seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "period": self.period,
            "points": self.points,
            "count": self.count,
            "numerator": self.density.numerator,
            "denominator": self.density.denominator,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PrimePowerDensity":
        return cls(
            q=int(data["q"]),
            density=Fraction(int(data["numerator"]), int(data["denominator"])),
            period=int(data["period"]),
            points=int(data["points"]),
            count=int(data.get("count", 0)),
        )


@dataclass(frozen=True)
class ExactDensity:
    """
    d_m of a variant, with the enumerations it came from.

    rule is "product" when per-prime-power densities were combined,
    "direct" for a single enumeration over the composite period and
    "trivial" for m = 1.
    """
    label: str
    m: int
    rank: int
    value: Fraction
    per_prime_power: tuple[PrimePowerDensity, ...] = ()
    rule: str = "product"
    wall_time: float = 0.0
    cached: bool = field(default=False, compare=False)
    # enumeration log of a fresh computation; cached records carry none
    provenance: dict[str, Any] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise InvariantViolationError(
                f"{self.label}, m={self.m}: density {self.value} outside [0, 1]"
            )
        if self.rule == "product" and self.per_prime_power:
            complements = (1 - part.density for part in self.per_prime_power)
            combined = 1 - prod(complements, start=Fraction(1))
            if combined != self.value:
                raise InvariantViolationError(
                    f"{self.label}, m={self.m}: {self.value} != product rule {combined}"
                )

    @property
    def points(self) -> int:
        return sum(part.points for part in self.per_prime_power)

    def decimal(self, digits: int = 6) -> str:
        """Approximate rendering; the fraction is authoritative."""
        return f"{float(self.value):.{digits}g}"

    def to_record(self, engine_version: str) -> dict[str, Any]:
        return {
            "variant": self.label,
            "m": self.m,
            "rank": self.rank,
            "numerator": self.value.numerator,
            "denominator": self.value.denominator,
            "rule": self.rule,
            "periods": [part.to_dict() for part in self.per_prime_power],
            "points": self.points,
            "engine_version": engine_version,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "ExactDensity":
        return cls(
            label=record["variant"],
            m=int(record["m"]),
            rank=int(record.get("rank", 0)),
            value=Fraction(int(record["numerator"]), int(record["denominator"])),
            per_prime_power=tuple(
                PrimePowerDensity.from_dict(part) for part in record.get("periods", [])
            ),
            rule=record.get("rule", "product"),
            cached=True,
        )

    def __str__(self) -> str:
        return f"d_{self.m}({self.label}) = {self.value}"
