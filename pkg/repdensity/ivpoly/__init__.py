"""
Integer-valued polynomials in factored form, their degree bookkeeping and
their periods modulo prime powers.
"""

from .periods import PeriodCertificate, period_composite, period_prime_power
from .polynomial import FactoredPolynomial, LinearForm, deg_bullet, eval_exact, eval_valuation

__all__ = [
    "LinearForm",
    "FactoredPolynomial",
    "deg_bullet",
    "eval_exact",
    "eval_valuation",
    "PeriodCertificate",
    "period_prime_power",
    "period_composite",
]
