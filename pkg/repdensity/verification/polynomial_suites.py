"""Suites for the degree polynomials: periods, valuations, anchors and binomial congruences."""

import itertools
import random

from ..ivpoly import period_prime_power
from ..numeric import admissible_exponent, fray_congruence_holds, val
from ..root_systems import (
    AlgebraId,
    Family,
    build_root_datum,
    dimension_polynomial,
    shifted_polynomial,
    weyl_dimension,
)
from .base import BaseSuite, SuiteReport

PRIME_POWERS = [(2, 1), (2, 2), (3, 1), (5, 1)]
SPREAD = 40


def anchor_algebras(max_rank: int = 6) -> list[AlgebraId]:
    algebras = []
    for n in range(1, max_rank + 1):
        algebras += [AlgebraId.gl(n), AlgebraId(Family.SO_ODD, n), AlgebraId(Family.SP, n)]
        if n >= 2:
            algebras.append(AlgebraId.sl(n))
        if n >= 3:
            algebras.append(AlgebraId(Family.SO_EVEN, n))
    return algebras


def _unit_weight(d: int, *entries: tuple[int, int]) -> list[int]:
    weight = [0] * d
    for i, value in entries:
        weight[i] = value
    return weight


def anchor_weights(algebra: AlgebraId) -> list[tuple[str, list[int], int]]:
    """(name, highest weight, expected degree) for trivial, defining and adjoint."""
    d = algebra.n
    anchors = [("trivial", [0] * d, 1), ("defining", _unit_weight(d, (0, 1)), algebra.matrix_size)]
    if algebra.family in (Family.GL, Family.SL):
        if d >= 2:
            anchors.append(("adjoint", _unit_weight(d, (0, 1), (d - 1, -1)), d * d - 1))
    elif algebra.family is Family.SP:
        anchors.append(("adjoint", _unit_weight(d, (0, 2)), algebra.dimension))
    elif d == 1:
        anchors.append(("adjoint", _unit_weight(d, (0, 1)), algebra.dimension))
    else:
        anchors.append(("adjoint", _unit_weight(d, (0, 1), (1, 1)), algebra.dimension))
    return anchors


class PeriodsSuite(BaseSuite):
    """
    Period certificates, valuation arithmetic, Vandermonde vanishing and
    degree anchors.
    """

    name = "periods"

    def algebras(self) -> list[AlgebraId]:
        return [AlgebraId.gl(2), AlgebraId.gl(3), AlgebraId.gl(4), AlgebraId.sp(4), AlgebraId.so(7)]

    def run(self) -> SuiteReport:
        rng = random.Random(self.options.seed)
        for algebra in self.algebras():
            f = dimension_polynomial(build_root_datum(algebra))
            for p, s in PRIME_POWERS:
                certificate = period_prime_power(f, p, s)
                self.check(
                    f"period {algebra} mod {certificate.q}",
                    certificate.within_bounds()
                    and certificate.verify(f, self.options.samples, self.options.seed, SPREAD),
                    f"period {certificate.period}",
                )
            self._check_valuations(algebra, f, rng)

        for n in range(2, 7):
            self._check_vandermonde(n, rng)
        for algebra in anchor_algebras():
            self._check_anchors(algebra)
        return self.report

    def _check_valuations(self, algebra: AlgebraId, f, rng: random.Random) -> None:
        for p in (2, 3):
            witness = None
            for _ in range(self.options.samples):
                x = [rng.randint(-SPREAD, SPREAD) for _ in range(f.rank)]
                if f.eval_valuation(x, p) != val(f.eval_exact(x), p):
                    witness = str(x)
                    break
            self.check(f"valuation {algebra} at {p}", witness is None, witness=witness)

    def _check_vandermonde(self, n: int, rng: random.Random) -> None:
        f = shifted_polynomial(build_root_datum(AlgebraId.gl(n)))
        witness = None
        for _ in range(self.options.samples // 10):
            x = [rng.randint(-SPREAD, SPREAD) for _ in range(n)]
            i, j = rng.sample(range(n), 2)
            x[j] = x[i]
            if f.eval_exact(x) != 0:
                witness = str(x)
                break
        rho = list(range(n - 1, -1, -1))
        if witness is None and n <= 5:
            for sigma in itertools.permutations(rho):
                if abs(f.eval_exact(sigma)) != 1:
                    witness = str(sigma)
                    break
        self.check(f"vandermonde gl_{n}", witness is None, witness=witness)

    def _check_anchors(self, algebra: AlgebraId) -> None:
        datum = build_root_datum(algebra)
        f = dimension_polynomial(datum)
        for name, weight, expected in anchor_weights(algebra):
            formula = weyl_dimension(datum, weight)
            polynomial = f.eval_exact(datum.coordinates_of(weight))
            self.check(
                f"{name} {algebra}",
                formula == polynomial == expected,
                f"expected {expected}",
                witness=(
                    None if formula == polynomial == expected
                    else f"formula={formula}, polynomial={polynomial}"
                ),
            )


class FraySuite(BaseSuite):
    """C(n + p^(s+r), k) == C(n, k) mod p^r on random admissible tuples."""

    name = "fray"

    def run(self) -> SuiteReport:
        rng = random.Random(self.options.seed)
        witness = None
        for _ in range(self.options.samples):
            p = rng.choice([2, 3, 5, 7])
            k = rng.randint(1, 60)
            s = admissible_exponent(k, p)
            r = rng.randint(1, 3)
            n = rng.randint(-10_000, 10_000)
            if not fray_congruence_holds(n, k, p, r, s):
                witness = f"n={n}, k={k}, p={p}, r={r}, s={s}"
                break
        self.check("fray congruence", witness is None, f"{self.options.samples} tuples", witness)
        return self.report
