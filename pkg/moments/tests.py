import math

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import quad

from limits.eigenpair import U0, u0
from special.exceptions import DomainError

from .integrals import (
    inner_integral, inner_integral_closed_form, moment_closed_form, moment_quadrature,
    moment_tensor_unsplit, moment_two_stage,
)
from .models import MomentEstimate, MomentMethod
from .sampling import moment_monte_carlo, sample_ball, shard_sizes

M1 = 128 / math.pi ** 3
M2 = 768 / math.pi ** 5 * (math.pi ** 2 - 8)


class ClosedFormTests(SimpleTestCase):
    def test_values(self):
        self.assertAlmostEqual(moment_closed_form(1).value, 4.12789, places=5)
        self.assertAlmostEqual(moment_closed_form(2).value, 4.69198, places=5)
        self.assertEqual(moment_closed_form(1).method, MomentMethod.CLOSED_FORM)

    def test_unsupported_order(self):
        with self.assertRaises(DomainError):
            moment_closed_form(3)

    def test_estimate_rejects_bad_fields(self):
        with self.assertRaises(DomainError):
            MomentEstimate(n=0, value=1.0, method=MomentMethod.QUADRATURE)
        with self.assertRaises(DomainError):
            MomentEstimate(n=1, value=1.0, method=MomentMethod.MONTE_CARLO, stderr=-1.0)
        for value in (0.0, -0.5, float('nan')):
            with self.assertRaises(DomainError):
                MomentEstimate(n=1, value=value, method=MomentMethod.QUADRATURE)


class QuadratureTests(SimpleTestCase):
    def test_matches_closed_forms(self):
        self.assertAlmostEqual(moment_quadrature(1, 64).value, M1, delta=1e-10)
        self.assertAlmostEqual(moment_quadrature(2, 64).value, M2, delta=1e-10)

    def test_third_moment_converges(self):
        coarse = moment_quadrature(3, 64).value
        fine = moment_quadrature(3, 96).value
        self.assertAlmostEqual(coarse, fine, delta=1e-9)

    def test_bounds(self):
        for n in range(1, 6):
            value = moment_quadrature(n).value
            self.assertGreater(value, 0)
            self.assertLessEqual(value, 2 ** n * U0() ** 2)

    def test_triangle_split_beats_unsplit_rule(self):
        split_error = abs(moment_quadrature(1, 64).value - M1)
        unsplit_error = abs(moment_tensor_unsplit(1, 64) - M1)
        self.assertGreater(unsplit_error, split_error)

    def test_order_too_low(self):
        with self.assertRaises(DomainError):
            moment_quadrature(1, 4)
        with self.assertRaises(DomainError):
            moment_quadrature(0)


class TwoStageTests(SimpleTestCase):
    def test_inner_integral_matches_closed_form(self):
        for n in (1, 2):
            for ry in (0.05, 0.3, 0.7, 1.0):
                self.assertAlmostEqual(inner_integral(n, ry), inner_integral_closed_form(n, ry), delta=1e-12)

    def test_inner_integral_against_scipy(self):
        # I(ry) is the integral of |x - y| u0(x) over the ball at |y| = ry
        ry = 0.4

        def integrand(rx):
            angular = ((rx + ry) ** 3 - abs(rx - ry) ** 3) / (3 * rx * ry)
            return 2 * math.pi * rx * rx * u0(rx) * angular

        oracle, _ = quad(integrand, 0, 1, points=[ry], epsabs=1e-13)
        self.assertAlmostEqual(inner_integral(1, ry), oracle, delta=1e-10)

    def test_inner_integral_domain(self):
        with self.assertRaises(DomainError):
            inner_integral(1, 0.0)
        with self.assertRaises(DomainError):
            inner_integral_closed_form(3, 0.5)

    def test_two_stage_agrees_with_collapsed_form(self):
        two_stage = moment_two_stage(1)
        self.assertAlmostEqual(two_stage.value, moment_quadrature(1).value, delta=1e-10)
        self.assertAlmostEqual(two_stage.value, M1, delta=1e-10)
        self.assertEqual(two_stage.method, MomentMethod.QUADRATURE)


class MonteCarloTests(SimpleTestCase):
    def test_ball_samples(self):
        rng = np.random.Generator(np.random.Philox(1))
        points, radii = sample_ball(rng, 20000)
        self.assertTrue(np.all(radii < 1))
        np.testing.assert_allclose(np.linalg.norm(points, axis=1), radii, rtol=1e-12)
        # uniform in volume: P(|x| < 1/2) = 1/8
        self.assertAlmostEqual(float(np.mean(radii < 0.5)), 0.125, delta=0.01)

    def test_shard_sizes(self):
        self.assertEqual(shard_sizes(10, 3), [4, 3, 3])
        self.assertEqual(sum(shard_sizes(1_000_000, 8)), 1_000_000)

    def test_agrees_with_closed_forms(self):
        for n, exact in ((1, M1), (2, M2)):
            estimate = moment_monte_carlo(n, 1_000_000, seed=7, shards=8)
            self.assertLess(abs(estimate.value - exact), 3 * estimate.stderr)
            self.assertEqual(estimate.method, MomentMethod.MONTE_CARLO)
            self.assertEqual((estimate.samples, estimate.seed, estimate.shards), (1_000_000, 7, 8))

    def test_cross_checks_third_moment(self):
        estimate = moment_monte_carlo(3, 400_000, seed=11, shards=4)
        self.assertLess(abs(estimate.value - moment_quadrature(3).value), 4 * estimate.stderr)

    def test_reproducible_for_fixed_seed_and_shards(self):
        first = moment_monte_carlo(1, 20_000, seed=3, shards=4)
        second = moment_monte_carlo(1, 20_000, seed=3, shards=4, workers=4)
        self.assertEqual(first, second)
        other = moment_monte_carlo(1, 20_000, seed=4, shards=4)
        self.assertNotEqual(first.value, other.value)

    def test_stderr_scaling(self):
        small = moment_monte_carlo(2, 100_000, seed=5)
        large = moment_monte_carlo(2, 400_000, seed=5)
        self.assertAlmostEqual(large.stderr / small.stderr, 0.5, delta=0.1)

    def test_invalid_sample_count(self):
        with self.assertRaises(DomainError):
            moment_monte_carlo(1, 999, seed=0)
        with self.assertRaises(DomainError):
            moment_monte_carlo(1, 5000, seed=0, shards=0)
