"""
Periods of factored integer-valued polynomials modulo prime powers.

A polynomial f with deg_bullet(f) = d satisfies f(x + P e_j) == f(x) mod p^s
for P = p^(floor(log_p d) + s). Periods for coprime moduli multiply.
"""

import logging
import random
from dataclasses import dataclass

from sympy import isprime

from ..exceptions import InvalidInputError
from ..numeric import PrimePowerFactorization
from .polynomial import FactoredPolynomial, deg_bullet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodCertificate:
    """
    A period of f modulo q = p^s.

    Attributes:
        q: The modulus p^s
        p: Prime of the modulus
        s: Exponent of the modulus
        period: Power of p; translating any coordinate by it preserves f mod q
        degree: deg_bullet of the certified polynomial
        fingerprint: FactoredPolynomial.fingerprint() of the certified polynomial
    """
    q: int
    p: int
    s: int
    period: int
    degree: int
    fingerprint: str

    @property
    def is_degenerate(self) -> bool:
        return self.degree == 0

    def within_bounds(self) -> bool:
        """(q/p) * deg <= period <= q * deg; trivially true when degenerate."""
        if self.is_degenerate:
            return self.period == 1
        return self.q * self.degree <= self.p * self.period and self.period <= self.q * self.degree

    def verify(
        self, f: FactoredPolynomial, samples: int = 200, seed: int = 0, spread: int = 50
    ) -> bool:
        """
        Spot-check the period on random points.

        Args:
            f: Polynomial the certificate was issued for
            samples: Number of random (x, j) pairs
            seed: Seed for the sampler
            spread: Coordinates are drawn from [-spread, spread]
        """
        if f.fingerprint() != self.fingerprint:
            raise InvalidInputError("Certificate was issued for a different polynomial")
        rng = random.Random(seed)
        for _ in range(samples):
            x = [rng.randint(-spread, spread) for _ in range(f.rank)]
            j = rng.randrange(f.rank) if f.rank else 0
            shifted = list(x)
            if f.rank:
                shifted[j] += self.period
            if (f.eval_exact(shifted) - f.eval_exact(x)) % self.q:
                logger.error(f"Period {self.period} mod {self.q} fails at x={x}, j={j}")
                return False
        return True


def _floor_log(d: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= d:
        e += 1
    return e


def period_prime_power(f: FactoredPolynomial, p: int, s: int) -> PeriodCertificate:
    """
    Certified period of f modulo p^s.

    A constant polynomial gets the degenerate period 1.

    Args:
        f: Factored polynomial
        p: Prime
        s: Positive exponent

    Returns:
        PeriodCertificate with period p^(floor(log_p deg_bullet(f)) + s)
    """
    if not isprime(p):
        raise InvalidInputError(f"p must be prime, got {p}")
    if s < 1:
        raise InvalidInputError(f"Exponent must be positive, got {s}")

    degree = deg_bullet(f)
    q = p**s
    period = 1 if degree == 0 else p ** (_floor_log(degree, p) + s)
    certificate = PeriodCertificate(
        q=q, p=p, s=s, period=period, degree=degree, fingerprint=f.fingerprint()
    )
    # the closed form always lands inside the sandwich
    assert certificate.within_bounds()
    logger.debug(f"Period of {q} for deg_bullet={degree}: {period}")
    return certificate


def period_composite(f: FactoredPolynomial, m: PrimePowerFactorization) -> int:
    """Product of the prime-power periods; an m-period of f."""
    period = 1
    for p, s in m.factors:
        period *= period_prime_power(f, p, s).period
    return period
