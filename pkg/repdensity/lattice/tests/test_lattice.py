"""
Unit tests for lattice densities, norms and sublattices
"""

import random
import unittest
from fractions import Fraction

import numpy as np

from repdensity.density_engine import nondivisible_predicate
from repdensity.exceptions import BudgetExceededError, InvalidInputError, SingularMatrixError
from repdensity.ivpoly import period_prime_power
from repdensity.lattice import (
    LatticeMap,
    Norm,
    PeriodicSetSpec,
    density_empirical,
    density_empirical_cone,
    density_fundamental,
    density_restricted,
    invariant_factors,
    parity_sublattice,
    pull_back,
    sublattice_index,
    sublattice_set,
)
from repdensity.root_systems import AlgebraId, build_root_datum, dimension_polynomial


def always(points: np.ndarray) -> np.ndarray:
    return np.ones(points.shape[0], dtype=bool)


def odd_f3(points: np.ndarray) -> np.ndarray:
    x1, x2, x3 = points[:, 0], points[:, 1], points[:, 2]
    return ((x1 - x2) * (x1 - x3) * (x2 - x3) // 2) % 2 == 1


def distinct_mod(m: int):
    return lambda points: (points[:, 0] - points[:, 1]) % m != 0


def same_sign(points: np.ndarray) -> np.ndarray:
    return points[:, 0] * points[:, 1] >= 0


def gl_nondivisible(n: int, p: int, s: int) -> PeriodicSetSpec:
    """Weights of gl_n, in standard coordinates, whose degree p^s does not divide."""
    f = dimension_polynomial(build_root_datum(AlgebraId.gl(n)))
    certificate = period_prime_power(f, p, s)
    return PeriodicSetSpec(
        n, nondivisible_predicate(f, certificate.q), certificate.period, f"gl_{n} mod {p ** s}"
    )


def sl_in_gl(n: int) -> LatticeMap:
    """sl_n weights as the gl_n weights with last coordinate 0."""
    return LatticeMap.from_matrix([[int(i == j) for j in range(n - 1)] for i in range(n)])


class TestLatticeMap(unittest.TestCase):
    """Test affine lattice maps"""

    def test_apply_and_compose(self):
        outer = LatticeMap.from_matrix([[1, 0], [0, 1], [-1, -1]])
        inner = LatticeMap.from_matrix([[1, 1], [0, 2]], offset=[1, 0])
        self.assertEqual(outer.apply((2, 3)), (2, 3, -5))
        composed = outer.compose(inner)
        for y in [(0, 0), (1, 2), (-3, 5)]:
            self.assertEqual(composed.apply(y), outer.apply(inner.apply(y)))
        points = np.array([[0, 0], [1, 2], [-3, 5]], dtype=np.int64)
        expected = [list(outer.apply(tuple(p))) for p in points.tolist()]
        self.assertEqual(outer.apply_array(points).tolist(), expected)

    def test_rejects_non_injective(self):
        with self.assertRaises(SingularMatrixError):
            LatticeMap.from_matrix([[1, 2], [2, 4]])

    def test_index(self):
        self.assertEqual(LatticeMap.identity(3).index(), 1)
        self.assertEqual(LatticeMap.from_matrix([[2, 0], [0, 2]]).index(), 4)


class TestNorm(unittest.TestCase):
    """Test sup-type norms"""

    def test_norm_axioms(self):
        rng = random.Random(3)
        for norm in (Norm.sup(2), Norm.sheared([[1, 0], [1, 1]])):
            self.assertEqual(norm((0, 0)), 0)
            for _ in range(500):
                v = (rng.randint(-50, 50), rng.randint(-50, 50))
                w = (rng.randint(-50, 50), rng.randint(-50, 50))
                c = rng.randint(-5, 5)
                if v != (0, 0):
                    self.assertGreater(norm(v), 0)
                self.assertEqual(norm((c * v[0], c * v[1])), abs(c) * norm(v))
                self.assertLessEqual(norm((v[0] + w[0], v[1] + w[1])), norm(v) + norm(w))

    def test_singular_change_of_basis(self):
        with self.assertRaises(SingularMatrixError):
            Norm.sheared([[1, 1], [1, 1]])

    def test_box_covers_ball(self):
        norm = Norm.sheared([[1, 0], [1, 1]])
        hx, hy = norm.box_half_widths(10)
        for x in range(-30, 31):
            for y in range(-30, 31):
                if norm((x, y)) < 10:
                    self.assertLessEqual(abs(x), hx)
                    self.assertLessEqual(abs(y), hy)


class TestDensityFundamental(unittest.TestCase):
    """Test exact densities of periodic sets"""

    def test_examples(self):
        for m in range(2, 8):
            distinct = PeriodicSetSpec(2, distinct_mod(m), m)
            self.assertEqual(density_fundamental(distinct), Fraction(m - 1, m))
        self.assertEqual(density_fundamental(PeriodicSetSpec(3, always, 5)), 1)
        self.assertEqual(density_fundamental(PeriodicSetSpec(3, odd_f3, 4)), Fraction(3, 8))

    def test_translation_invariance(self):
        base = PeriodicSetSpec(3, odd_f3, 4)
        expected = density_fundamental(base)
        for shift in [(1, 0, 0), (3, -7, 2), (-5, 5, 11)]:
            self.assertEqual(density_fundamental(base.translate(shift)), expected)

    def test_period_independence(self):
        base = PeriodicSetSpec(3, odd_f3, 4)
        self.assertEqual(density_fundamental(base.with_period(8)), density_fundamental(base))
        with self.assertRaises(InvalidInputError):
            base.with_period(6)

    def test_worker_count_irrelevant(self):
        base = PeriodicSetSpec(3, odd_f3, 8)
        self.assertEqual(
            density_fundamental(base, workers=1, block_points=7),
            density_fundamental(base, workers=4, block_points=13),
        )

    def test_verify_period(self):
        self.assertTrue(PeriodicSetSpec(3, odd_f3, 4).verify_period(seed=1))
        self.assertFalse(PeriodicSetSpec(3, odd_f3, 3).verify_period(seed=1))

    def test_budget(self):
        with self.assertRaises(BudgetExceededError) as ctx:
            density_fundamental(PeriodicSetSpec(3, always, 10), budget=999)
        self.assertEqual(ctx.exception.required_points, 1000)


class TestEmpiricalDensity(unittest.TestCase):
    """Test ball-counting oracles"""

    def test_always_true(self):
        self.assertEqual(density_empirical(always, Norm.sup(2), 7), 1)
        self.assertEqual(density_empirical(always, Norm.sheared([[1, 0], [1, 1]]), 7), 1)

    def test_same_sign_depends_on_norm(self):
        n0 = density_empirical(same_sign, Norm.sup(2), 300)
        n1 = density_empirical(same_sign, Norm.sheared([[1, 0], [1, 1]]), 300)
        self.assertLess(abs(float(n0) - 0.5), 0.01)
        self.assertLess(abs(float(n1) - 0.25), 0.01)

    def test_periodic_set_is_norm_independent(self):
        spec = PeriodicSetSpec(2, distinct_mod(3), 3)
        exact = density_fundamental(spec)
        for norm in (Norm.sup(2), Norm.sheared([[1, 0], [1, 1]]), Norm.sheared([[2, 1], [1, 1]])):
            approx = density_empirical(spec.predicate, norm, 150)
            self.assertLess(abs(approx - exact) / exact, Fraction(1, 10))

    def test_cone_gl2(self):
        m = 3

        def dominant(points):
            return (points[:, 0] >= points[:, 1]) & (points[:, 1] >= 0)

        def not_divisible(points):
            return (points[:, 0] - points[:, 1] + 1) % m != 0

        approx = density_empirical_cone(not_divisible, dominant, Norm.sup(2), 300)
        self.assertLess(abs(approx - Fraction(m - 1, m)), Fraction(1, 100))

    def test_sublattice_ball(self):
        doubled = LatticeMap.from_matrix([[2, 0], [0, 1]])
        self.assertEqual(density_empirical(always, Norm.sup(2), 20, lattice=doubled), 1)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            density_empirical(always, Norm.sup(2), 1000, budget=10_000)

    def test_rejects_nonpositive_radius(self):
        with self.assertRaises(InvalidInputError):
            density_empirical(always, Norm.sup(2), 0)


class TestSublattice(unittest.TestCase):
    """Test sublattice index and restricted densities"""

    def test_index_examples(self):
        self.assertEqual(sublattice_index([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 1)
        self.assertEqual(invariant_factors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), [1, 1, 1])
        self.assertEqual(sublattice_index([[2, 0], [0, 2]]), 4)
        self.assertEqual(invariant_factors([[2, 0], [0, 2]]), [2, 2])
        # simple roots of sl_3 in the fundamental weight basis
        self.assertEqual(sublattice_index([[2, -1], [-1, 2]]), 3)
        self.assertEqual(invariant_factors([[2, 1], [0, 3]]), [1, 6])

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            sublattice_index([[1, 2], [2, 4]])
        with self.assertRaises(InvalidInputError):
            sublattice_index([[1, 2, 3], [4, 5, 6]])

    def test_sublattice_density_is_inverse_index(self):
        for matrix in ([[2, 1], [0, 3]], [[2, -1], [-1, 2]], [[1, 0, 0], [0, 2, 0], [1, 1, 4]]):
            self.assertEqual(
                density_fundamental(sublattice_set(matrix)), Fraction(1, sublattice_index(matrix))
            )

    def test_restricted(self):
        even = PeriodicSetSpec(1, lambda points: points[:, 0] % 2 == 0, 2)
        self.assertEqual(density_restricted(even, LatticeMap.from_matrix([[3]])), Fraction(1, 2))
        self.assertEqual(density_restricted(even, LatticeMap.from_matrix([[2]])), 1)

        spec = PeriodicSetSpec(3, odd_f3, 4)
        self.assertEqual(
            density_restricted(spec, LatticeMap.identity(3)), density_fundamental(spec)
        )

    def test_pull_back_keeps_period(self):
        for n in (2, 3, 4):
            for p, s in ((2, 1), (3, 1), (2, 2)):
                ambient = gl_nondivisible(n, p, s)
                restricted = pull_back(ambient, sl_in_gl(n))
                self.assertEqual(restricted.rank, n - 1)
                self.assertEqual(restricted.period, ambient.period)
                self.assertTrue(restricted.verify_period(samples=300, seed=n), (n, p, s))

    def test_sl_inside_gl_has_the_gl_density(self):
        for n in (2, 3, 4):
            for p, s in ((2, 1), (3, 1), (2, 2)):
                ambient = gl_nondivisible(n, p, s)
                restricted = density_restricted(ambient, sl_in_gl(n))
                self.assertEqual(restricted, density_fundamental(ambient), (n, p, s))
        self.assertEqual(density_restricted(gl_nondivisible(3, 2, 1), sl_in_gl(3)), Fraction(3, 8))
        self.assertEqual(density_restricted(gl_nondivisible(3, 3, 1), sl_in_gl(3)), Fraction(2, 9))

    def test_parity_sublattice(self):
        for form in [(1, 1), (2, 3, 1), (1, 0, 0, 5), (2, 4)]:
            basis = parity_sublattice(form)
            expected = 1 if all(c % 2 == 0 for c in form) else 2
            self.assertEqual(basis.index(), expected)
            for column in basis.columns():
                self.assertEqual(sum(c * v for c, v in zip(form, column)) % 2, 0)


if __name__ == '__main__':
    unittest.main()
