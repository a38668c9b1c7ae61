"""Prime-power factorization of the modulus m."""

from dataclasses import dataclass

from sympy import factorint, isprime

from ..exceptions import InvalidInputError


@dataclass(frozen=True)
class PrimePowerFactorization:
    """
    m written as an increasing list of (p, s) pairs.

    Attributes:
        m: The factored positive integer
        factors: Tuple of (prime, exponent) pairs, primes strictly increasing
    """
    m: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        product = 1
        previous = 1
        for p, s in self.factors:
            if p <= previous or not isprime(p):
                raise InvalidInputError(
                    f"Factors of {self.m} must be increasing primes: {self.factors}"
                )
            if s < 1:
                raise InvalidInputError(f"Exponent of {p} must be positive, got {s}")
            product *= p**s
            previous = p
        if product != self.m:
            raise InvalidInputError(f"Factors {self.factors} multiply to {product}, not {self.m}")

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def prime_powers(self) -> list[int]:
        """The coprime parts q_i = p_i^s_i."""
        return [p**s for p, s in self.factors]

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{s}" if s > 1 else str(p) for p, s in self.factors)


def factorize(m: int) -> PrimePowerFactorization:
    """
    Factor a positive integer into prime powers.

    Args:
        m: Positive integer

    Returns:
        PrimePowerFactorization with primes in increasing order

    Raises:
        InvalidInputError: If m is not a positive integer
    """
    if isinstance(m, bool) or not isinstance(m, int):
        raise InvalidInputError(f"m must be an integer, got {type(m).__name__}")
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")

    factors = tuple(sorted(factorint(m).items()))
    return PrimePowerFactorization(m=m, factors=tuple((int(p), int(s)) for p, s in factors))
