"""
Logging utilities for the provenance of density computations
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any


@dataclass
class ComputationStep:
    """Record of a single prime-power enumeration"""
    variant: str
    q: int
    period: int = 1
    points: int = 0
    count: int = 0
    seconds: float = 0.0
    error: str | None = None
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> dict[str, Any]:
        return {
            "variant": self.variant,
            "q": self.q,
            "period": self.period,
            "points": self.points,
            "count": self.count,
            "seconds": round(self.seconds, 6),
            "error": self.error,
            "timestamp": self.timestamp.isoformat()
        }


class ComputationLogger:
    """Logger for tracking enumeration steps and errors"""

    def __init__(self, variant: str):
        self.variant = variant
        self.steps: list[ComputationStep] = []
        self.errors: list[ComputationStep] = []
        self.logger = logging.getLogger(f"repdensity.density_engine.{variant}")

    def log_step(
        self, q: int, period: int, points: int, count: int, seconds: float
    ) -> ComputationStep:
        """Log a finished enumeration"""
        step = ComputationStep(
            variant=self.variant,
            q=q,
            period=period,
            points=points,
            count=count,
            seconds=seconds
        )
        self.steps.append(step)
        self.logger.info(
            f"mod {q}: {count}/{points} points not divisible (period {period}, {seconds:.2f}s)"
        )
        return step

    def log_error(self, q: int, error: str, period: int = 1):
        """Log an enumeration that could not run"""
        step = ComputationStep(variant=self.variant, q=q, period=period, error=error)
        self.errors.append(step)
        self.logger.error(f"Failed mod {q}: {error}")

    def get_summary(self) -> dict[str, Any]:
        """Get summary of the computation"""
        return {
            "variant": self.variant,
            "enumerations": len(self.steps),
            "points": sum(step.points for step in self.steps),
            "errors": len(self.errors),
            "steps": [step.to_dict() for step in self.steps],
            "error_details": [step.to_dict() for step in self.errors]
        }
