"""
Error hierarchy shared by the density toolkit.

Precondition failures subclass ValueError so callers that only know the
standard library still catch them.
"""


class DensityError(Exception):
    """Base class for every error raised by repdensity."""


class InvalidInputError(DensityError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedVariantError(DensityError, ValueError):
    """The requested algebra, group or subfamily has no implementation."""


class SingularMatrixError(DensityError, ValueError):
    """A lattice matrix is singular or not of full column rank."""


class IntegralityError(DensityError, ArithmeticError):
    """A factored polynomial produced a non-integral value."""


class InvariantViolationError(DensityError, AssertionError):
    """An asserted inequality between computed densities failed."""


class BudgetExceededError(DensityError):
    """An enumeration would visit more points than the configured budget."""

    def __init__(self, required_points: int, budget: int, what: str = "enumeration"):
        self.required_points = required_points
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {required_points} points, budget is {budget}"
        )
