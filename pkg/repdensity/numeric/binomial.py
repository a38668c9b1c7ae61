"""Binomial coefficients as integer-valued polynomials and their congruences."""

from sympy import factorial, ff, isprime

from ..exceptions import InvalidInputError


def binomial_poly(x: int, k: int) -> int:
    """
    Evaluate the polynomial x(x-1)...(x-k+1)/k! at an integer x.

    Unlike the combinatorial binomial this is defined for negative x,
    e.g. binomial_poly(-4, 4) == 35.
    """
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    numerator = int(ff(x, k))
    denominator = int(factorial(k))
    quotient, remainder = divmod(numerator, denominator)
    # k! always divides a product of k consecutive integers
    assert remainder == 0
    return quotient


def fray_congruence_holds(n: int, k: int, p: int, r: int, s: int) -> bool:
    """
    Check C(n + p^(s+r), k) == C(n, k) mod p^r.

    The congruence is expected to hold for every integer n once
    p^s <= k < p^(s+1); callers use this as a property oracle.

    Args:
        n: Upper index, any integer
        k: Lower index, positive
        p: Prime
        r: Positive exponent of the modulus
        s: Nonnegative exponent with p^s <= k < p^(s+1)

    Raises:
        InvalidInputError: If the tuple is not admissible
    """
    if not isprime(p):
        raise InvalidInputError(f"p must be prime, got {p}")
    if k < 1 or r < 1 or s < 0:
        raise InvalidInputError(f"Need k >= 1, r >= 1, s >= 0; got k={k}, r={r}, s={s}")
    if not p**s <= k < p ** (s + 1):
        raise InvalidInputError(f"Need {p}^{s} <= k < {p}^{s + 1}, got k={k}")

    modulus = p**r
    shifted = binomial_poly(n + p ** (s + r), k)
    return (shifted - binomial_poly(n, k)) % modulus == 0


def admissible_exponent(k: int, p: int) -> int:
    """The unique s with p^s <= k < p^(s+1)."""
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    s = 0
    while p ** (s + 1) <= k:
        s += 1
    return s
