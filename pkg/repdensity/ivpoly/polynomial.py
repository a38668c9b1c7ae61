"""
Integer-valued polynomials kept as a product of integer affine forms over a
positive integer denominator.
"""

import hashlib
from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from ..exceptions import IntegralityError, InvalidInputError
from ..numeric import INFINITE, Valuation, val


@dataclass(frozen=True)
class LinearForm:
    """
    Affine form x -> coefficients . x + constant on Z^k.

    Attributes:
        coefficients: Integer coefficient per enumeration coordinate
        constant: Integer constant term
    """
    coefficients: tuple[int, ...]
    constant: int = 0

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Sequence[int]) -> int:
        if len(x) != len(self.coefficients):
            raise InvalidInputError(
                f"Form of rank {self.rank} evaluated at a vector of length {len(x)}"
            )
        return sum(c * xi for c, xi in zip(self.coefficients, x)) + self.constant

    def involves(self, i: int) -> bool:
        return self.coefficients[i] != 0

    def pullback(self, matrix: Sequence[Sequence[int]], offset: Sequence[int]) -> "LinearForm":
        """Compose with the affine map y -> matrix @ y + offset."""
        source_rank = len(matrix[0]) if matrix else 0
        coefficients = tuple(
            sum(self.coefficients[i] * matrix[i][j] for i in range(self.rank))
            for j in range(source_rank)
        )
        constant = self.constant + sum(c * b for c, b in zip(self.coefficients, offset))
        return LinearForm(coefficients, constant)

    def __str__(self) -> str:
        terms = [f"{c}*x{i + 1}" for i, c in enumerate(self.coefficients) if c]
        if self.constant or not terms:
            terms.append(str(self.constant))
        return "(" + " + ".join(terms) + ")"


@dataclass(frozen=True)
class FactoredPolynomial:
    """
    (product of forms) / denominator, integer valued on Z^rank.

    Attributes:
        forms: The affine factors
        denominator: Positive integer divisor of every value of the product
        rank: Number of variables
    """
    forms: tuple[LinearForm, ...]
    denominator: int
    rank: int

    def __post_init__(self):
        if self.denominator < 1:
            raise InvalidInputError(f"Denominator must be positive, got {self.denominator}")
        for form in self.forms:
            if form.rank != self.rank:
                raise InvalidInputError(
                    f"Form {form} has rank {form.rank}, polynomial has rank {self.rank}"
                )

    def degree_in(self, i: int) -> int:
        """deg_{x_i}: number of forms involving x_i."""
        return sum(1 for form in self.forms if form.involves(i))

    def values(self, x: Sequence[int]) -> list[int]:
        self._check_point(x)
        return [form(x) for form in self.forms]

    def eval_exact(self, x: Sequence[int]) -> int:
        """
        Exact integer value at x.

        Raises:
            IntegralityError: If the denominator does not divide the product
        """
        numerator = prod(self.values(x))
        quotient, remainder = divmod(numerator, self.denominator)
        if remainder:
            raise IntegralityError(
                f"{numerator}/{self.denominator} is not an integer at x={tuple(x)}"
            )
        return quotient

    def eval_valuation(self, x: Sequence[int], p: int) -> Valuation:
        """
        p-adic valuation of the value at x, from per-form valuations.

        The product is never formed; a vanishing form gives INFINITE.
        """
        total = 0
        for value in self.values(x):
            if value == 0:
                return INFINITE
            total += val(value, p)
        return total - val(self.denominator, p)

    def pullback(
        self, matrix: Sequence[Sequence[int]], offset: Sequence[int] | None = None
    ) -> "FactoredPolynomial":
        """
        Compose with an integer affine map Z^j -> Z^rank.

        Args:
            matrix: rank x j integer matrix
            offset: Translation in Z^rank, zero by default
        """
        if len(matrix) != self.rank:
            raise InvalidInputError(f"Map has {len(matrix)} rows, polynomial rank is {self.rank}")
        offset = offset if offset is not None else [0] * self.rank
        source_rank = len(matrix[0]) if matrix else 0
        forms = tuple(form.pullback(matrix, offset) for form in self.forms)
        return FactoredPolynomial(forms, self.denominator, source_rank)

    def translate(self, shift: Sequence[int]) -> "FactoredPolynomial":
        """x -> f(x + shift)."""
        identity = [[int(i == j) for j in range(self.rank)] for i in range(self.rank)]
        return self.pullback(identity, shift)

    def fingerprint(self) -> str:
        text = "|".join(
            ",".join(map(str, form.coefficients)) + ";" + str(form.constant)
            for form in self.forms
        )
        return hashlib.sha256(f"{self.rank}#{self.denominator}#{text}".encode()).hexdigest()[:16]

    def _check_point(self, x: Sequence[int]) -> None:
        if len(x) != self.rank:
            raise InvalidInputError(f"Expected a vector of length {self.rank}, got {len(x)}")

    def __str__(self) -> str:
        body = "".join(str(form) for form in self.forms) or "1"
        return f"{body} / {self.denominator}" if self.denominator != 1 else body


def deg_bullet(f: FactoredPolynomial) -> int:
    """max_i deg_{x_i} f, read off the factors; 0 for a constant."""
    if not f.forms or f.rank == 0:
        return 0
    return max(f.degree_in(i) for i in range(f.rank))


def eval_exact(f: FactoredPolynomial, x: Sequence[int]) -> int:
    return f.eval_exact(x)


def eval_valuation(f: FactoredPolynomial, x: Sequence[int], p: int) -> Valuation:
    return f.eval_valuation(x, p)
