"""
Closed-form bounds on d_m, with exponentials certified by rationals.

Every upper bound has the shape c * exp(x). ExpBound keeps that shape for
display and compares through exp_upper, a rational that is provably at
least exp(x), so no comparison depends on floating-point rounding.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import ff

from ..exceptions import InvalidInputError, InvariantViolationError, UnsupportedVariantError
from ..ivpoly import period_prime_power
from ..numeric import factorize
from ..root_systems import (
    AlgebraId,
    Family,
    GroupId,
    GroupKind,
    build_root_datum,
    shifted_polynomial,
)

# truncation error target of the exponential series
EPSILON = Fraction(1, 2**64)


def _series(t: Fraction) -> tuple[Fraction, Fraction, int]:
    """Partial sum of exp(t) up to index J, the next term and J."""
    total = Fraction(0)
    term = Fraction(1)
    j = 0
    while True:
        total += term
        term = term * t / (j + 1)
        if term < EPSILON and j + 2 > t:
            return total, term, j
        j += 1


def exp_upper(x: Fraction | int) -> Fraction:
    """A rational r with exp(x) <= r."""
    x = Fraction(x)
    total, remainder, j = _series(abs(x))
    if x < 0:
        return 1 / total
    return total + remainder * (j + 2) / (j + 2 - x)


def exp_lower(x: Fraction | int) -> Fraction:
    """A rational r with r <= exp(x)."""
    x = Fraction(x)
    if x < 0:
        return 1 / exp_upper(-x)
    total, _, _ = _series(x)
    return total


def omega(m: int) -> int:
    return factorize(m).omega


@dataclass(frozen=True)
class ExpBound:
    """coefficient * exp(exponent)."""
    coefficient: int
    exponent: Fraction

    def upper(self) -> Fraction:
        if self.coefficient == 0:
            return Fraction(0)
        return self.coefficient * exp_upper(self.exponent)

    def holds(self, value: Fraction) -> bool:
        """value <= bound, decided on the certified side."""
        return value <= self.upper()

    def __float__(self) -> float:
        return self.coefficient * math.exp(self.exponent)

    def __str__(self) -> str:
        if self.coefficient == 0:
            return "0"
        prefix = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{prefix}exp({self.exponent})"


def _check_m(m: int) -> None:
    if m < 1:
        raise InvalidInputError(f"m must be a positive integer, got {m}")


def bound_gl(n: int, m: int) -> tuple[Fraction, ExpBound | None]:
    """
    n!/(mn)^n <= d_m(gl_n) <= omega(m) exp(-n/4m).

    The upper bound needs n >= 2 and is None for n = 1.
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if m < 2:
        raise InvalidInputError(f"m must be at least 2, got {m}")
    lower = Fraction(math.factorial(n), (m * n) ** n)
    upper = ExpBound(omega(m), Fraction(-n, 4 * m)) if n >= 2 else None
    return lower, upper


def bound_classical(family: Family, n: int, m: int) -> ExpBound:
    """omega(m) exp(-n/8m) for so_{2n+1}, sp_{2n} and so_{2n}."""
    if family not in (Family.SO_ODD, Family.SP, Family.SO_EVEN):
        raise UnsupportedVariantError(f"No classical bound for family {family.value}")
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    _check_m(m)
    return ExpBound(omega(m), Fraction(-n, 8 * m))


def algebra_bound(algebra: AlgebraId, m: int) -> ExpBound | None:
    """Upper bound for d_m of an algebra, None where no bound applies."""
    _check_m(m)
    if algebra.family in (Family.GL, Family.SL):
        n = algebra.matrix_size
        return ExpBound(omega(m), Fraction(-n, 4 * m)) if n >= 2 else None
    if algebra.n < 2:
        return None
    return bound_classical(algebra.family, algebra.n, m)


def bound_selfdual(algebra: AlgebraId, m: int, orthogonal: bool = False) -> ExpBound | None:
    """
    Upper bound for the self-dual (or orthogonal) density.

    sl_n gets omega(m) exp(-n/36m) and so_{2n} with n odd gets
    omega(m) exp(-n/16m). Where every weight is self-dual the algebra bound
    applies. The orthogonal density is at most twice the self-dual one.
    """
    _check_m(m)
    if algebra.family is Family.GL:
        raise UnsupportedVariantError(f"Self-dual weights need a semisimple algebra, got {algebra}")
    if algebra.family is Family.SL:
        bound = ExpBound(omega(m), Fraction(-algebra.n, 36 * m))
    elif algebra.family is Family.SO_EVEN and algebra.n % 2:
        bound = ExpBound(omega(m), Fraction(-algebra.n, 16 * m))
    else:
        bound = algebra_bound(algebra, m)
        if bound is None:
            return None
    if orthogonal:
        return ExpBound(2 * bound.coefficient, bound.exponent)
    return bound


def bound_group(group: GroupId, m: int) -> ExpBound | None:
    """
    SO_N: 2 omega(m) exp(-N/8m); PGL_n: n omega(m) exp(-n/4m); the simply
    connected group shares its algebra's bound.
    """
    _check_m(m)
    if group.kind is GroupKind.SIMPLY_CONNECTED:
        return algebra_bound(group.algebra, m)
    if group.kind is GroupKind.SO:
        size = group.algebra.matrix_size
        return ExpBound(2 * omega(m), Fraction(-size, 8 * m))
    n = group.algebra.n
    return ExpBound(n * omega(m), Fraction(-n, 4 * m))


def vandermonde_tail(period: int, n: int) -> tuple[Fraction, ExpBound]:
    """
    (period)_n / period^n and its bound exp(-n^2 / 4 period).

    Raises:
        InvariantViolationError: If the ratio exceeds the bound
    """
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    if period < 1:
        raise InvalidInputError(f"Period must be positive, got {period}")
    exact = Fraction(int(ff(period, n)), period**n)
    bound = ExpBound(1, Fraction(-n * n, 4 * period))
    if not bound.holds(exact):
        raise InvariantViolationError(f"({period})_{n}/{period}^{n} = {exact} exceeds {bound}")
    return exact, bound


def union_bound(periods: Sequence[int], n: int, index: int = 1) -> Fraction:
    """
    Certified value of index * sum_i exp(-n^2 / 4 period_i).

    Bounds d_m of gl_n, or of a sublattice of that index, when the periods
    are those of the prime powers of m.
    """
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    return index * sum((exp_upper(Fraction(-n * n, 4 * period)) for period in periods), Fraction(0))


def lower_bound_permutations(n: int, p: int) -> Fraction:
    """
    n! / r^n <= d_p(gl_n), with r the period of the shifted gl_n
    polynomial mod p: the permutations of rho are distinct points of one
    tile where the polynomial is a unit.
    """
    f = shifted_polynomial(build_root_datum(AlgebraId.gl(n)))
    period = period_prime_power(f, p, 1).period
    return Fraction(math.factorial(n), period**n)
