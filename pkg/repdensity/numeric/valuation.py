"""p-adic valuations of integers."""

import math
from typing import Final

from sympy import multiplicity

# val(0, p); compares above every integer and absorbs addition
INFINITE: Final[float] = math.inf

Valuation = int | float


def val(x: int, p: int) -> Valuation:
    """
    Largest e with p^e dividing x.

    Args:
        x: Any integer, sign is ignored
        p: A prime

    Returns:
        The exponent, or INFINITE when x is 0
    """
    if x == 0:
        return INFINITE
    return int(multiplicity(p, abs(x)))


def is_infinite(v: Valuation) -> bool:
    return v == INFINITE
