import math

import numpy as np
from django.test import SimpleTestCase

from limits.eigenpair import LAMBDA0
from moments.integrals import moment_closed_form
from moments.sampling import moment_monte_carlo
from resonances.exact import nanosphere_wave_number_simplified
from special.exceptions import DomainError

from .models import ApproximationLevel, ExpansionSeries, ExpansionTerm
from .series import (
    approx_lambda, approximation, exact_lambda, r0_series, r1_series, r2_coeffs, r2_extract,
    taylor_exact,
)

PI = math.pi
R1_STAR = PI ** 2 / 4
R1_STAR_STAR = 1j * (PI ** 3 / 4 - 2 * PI)
R2_STAR = -1 - PI ** 2 / 2
R2_STAR_STAR = 1j * (19 * PI / 6 - PI ** 3 / 4)


def loglog_slope(func, hs):
    errors = [abs(func(h)) for h in hs]
    slope, _ = np.polyfit(np.log(hs), np.log(errors), 1)
    return slope


class ExpansionSeriesTests(SimpleTestCase):
    def test_powers_must_increase(self):
        with self.assertRaises(DomainError):
            ExpansionSeries((ExpansionTerm(2, 1j), ExpansionTerm(1, 1j)), 3)
        with self.assertRaises(DomainError):
            ExpansionSeries((ExpansionTerm(4, 1j),), 3)

    def test_evaluate_and_coefficient(self):
        series = ExpansionSeries.from_coefficients({0: 2.0, 2: 1j}, 3)
        self.assertEqual(series.evaluate(0.0), 2.0)
        self.assertEqual(series.evaluate(0.5), 2.0 + 0.25j)
        self.assertEqual(series.coefficient(1), 0)
        with self.assertRaises(DomainError):
            series.coefficient(4)

    def test_arithmetic(self):
        a = ExpansionSeries.from_coefficients({0: 1.0, 1: (2.0, 0.3)}, 1)
        b = ExpansionSeries.from_coefficients({1: (1.0, 0.4), 2: 5.0}, 2)
        total = a + b
        self.assertEqual(total.powers, [0, 1, 2])
        self.assertEqual(total.coefficient(1), 3.0)
        self.assertAlmostEqual(total.term(1).stderr, 0.5, places=15)
        self.assertEqual((a - b).coefficient(2), -5.0)
        self.assertEqual(total.truncation_order, 2)


class LeadingTermTests(SimpleTestCase):
    def test_r0(self):
        r0 = r0_series()
        self.assertEqual(r0.powers, [0, 1])
        self.assertEqual(r0.coefficient(0), PI ** 2 / 4)
        self.assertAlmostEqual(r0.coefficient(1), -1j * PI, delta=1e-12)
        self.assertAlmostEqual(r0.evaluate(0.1), PI ** 2 / 4 - 0.1j * PI, delta=1e-12)


class R1Tests(SimpleTestCase):
    def test_coefficients(self):
        r1 = r1_series(3)
        self.assertEqual(r1.powers, [2, 3])
        self.assertAlmostEqual(r1.coefficient(2), R1_STAR, delta=1e-12)
        self.assertAlmostEqual(r1.coefficient(3), R1_STAR_STAR, delta=1e-12)
        self.assertEqual(r1.term(2).stderr, 0.0)

    def test_missing_moment(self):
        with self.assertRaises(DomainError):
            r1_series(4, moments=[moment_closed_form(1), moment_closed_form(2)])
        with self.assertRaises(DomainError):
            r1_series(1)

    def test_monte_carlo_moments_propagate_error(self):
        moments = [moment_monte_carlo(n, 1_000_000, seed=7, shards=8) for n in (1, 2)]
        r1 = r1_series(3, moments=moments)
        for power, exact in ((2, R1_STAR), (3, R1_STAR_STAR)):
            term = r1.term(power)
            self.assertGreater(term.stderr, 0)
            self.assertLess(abs(term.value - exact), 3 * term.stderr)

    def test_higher_orders_use_quadrature_moments(self):
        r1 = r1_series(5)
        self.assertEqual(r1.powers, [2, 3, 4, 5])
        # i**4 makes the h**4 coefficient real and negative
        self.assertLess(r1.coefficient(4).real, 0)
        self.assertEqual(r1.coefficient(4).imag, 0)


class TaylorTests(SimpleTestCase):
    def test_coefficients(self):
        expected = [PI ** 2 / 4, -1j * PI, -1 - PI ** 2 / 4, 7j * PI / 6, 4 / 3 + PI ** 2 / 4]
        series = taylor_exact(4)
        for power, value in enumerate(expected):
            self.assertAlmostEqual(series.coefficient(power), value, delta=1e-8)

    def test_limit_eigenvalue_is_the_constant_term(self):
        self.assertAlmostEqual(taylor_exact(0).coefficient(0), LAMBDA0, delta=1e-14)

    def test_other_contrast(self):
        # lambda_h = (pi/2 - i asinh(h / sqrt(eta0)))**2 / (eta0 + h**2): constant pi**2 / (4 eta0), h term -i pi / eta0**1.5
        series = taylor_exact(2, eta0=4.0)
        self.assertAlmostEqual(series.coefficient(0), PI ** 2 / 16, delta=1e-12)
        self.assertAlmostEqual(series.coefficient(1), -1j * PI / 8, delta=1e-12)

    def test_order_limit(self):
        self.assertEqual(len(taylor_exact(8).terms), 9)
        with self.assertRaises(DomainError):
            taylor_exact(9)


class R2Tests(SimpleTestCase):
    def test_coefficients(self):
        r2 = r2_coeffs()
        self.assertEqual(r2.powers, [2, 3])
        self.assertAlmostEqual(r2.coefficient(2), R2_STAR, delta=1e-12)
        self.assertAlmostEqual(r2.coefficient(3), R2_STAR_STAR, delta=1e-12)

    def test_partial_sums_reproduce_taylor_series(self):
        total = r0_series() + r1_series() + r2_coeffs()
        taylor = taylor_exact(3)
        for power in range(4):
            self.assertAlmostEqual(total.coefficient(power), taylor.coefficient(power), delta=1e-14)

    def test_extraction_matches_coefficients(self):
        h = 0.01
        leading = R2_STAR * h ** 2 + R2_STAR_STAR * h ** 3
        self.assertLess(abs(r2_extract(h) - leading), 10 * h ** 4)

    def test_extraction_limit(self):
        # the h**3 term is imaginary, so the real part approaches R2* at rate h**2
        h = 1e-3
        self.assertAlmostEqual(r2_extract(h).real / h ** 2, R2_STAR, delta=1e-4)
        h = 1e-2
        self.assertAlmostEqual(r2_extract(h).imag / h ** 3, R2_STAR_STAR.imag, delta=1e-2)

    def test_extraction_is_second_order(self):
        slope = loglog_slope(r2_extract, np.logspace(-3, -1, 9))
        self.assertAlmostEqual(slope, 2.0, delta=0.1)

    def test_h_must_be_positive(self):
        with self.assertRaises(DomainError):
            r2_extract(0.0)


class ApproximationTests(SimpleTestCase):
    def test_exact_lambda_agrees_with_simplified_formula(self):
        for h in (0.01, 0.1, 0.5):
            k = nanosphere_wave_number_simplified(h)
            self.assertAlmostEqual(exact_lambda(h), k * k, delta=1e-12)

    def test_leading_level(self):
        self.assertAlmostEqual(approx_lambda(0.1, ApproximationLevel.R0), PI ** 2 / 4 - 0.1j * PI, delta=1e-12)

    def test_leading_term_error_is_second_order(self):
        slope = loglog_slope(lambda h: exact_lambda(h) - approx_lambda(h, 'R0'), np.logspace(-4, -1, 10))
        self.assertAlmostEqual(slope, 2.0, delta=0.1)

    def test_full_error_is_fourth_order(self):
        slope = loglog_slope(lambda h: exact_lambda(h) - approx_lambda(h, 'R0R1R2'), np.logspace(np.log10(3e-3), np.log10(3e-2), 8))
        self.assertAlmostEqual(slope, 4.0, delta=0.2)

    def test_r1_improves_only_the_imaginary_part(self):
        for h in (0.1, 0.2, 0.3):
            exact = exact_lambda(h)
            r0 = approx_lambda(h, 'R0')
            r0r1 = approx_lambda(h, 'R0R1')
            self.assertLess(abs(exact.imag - r0r1.imag), abs(exact.imag - r0.imag))
            self.assertGreater(abs(exact.real - r0r1.real), abs(exact.real - r0.real))

    def test_invalid_arguments(self):
        with self.assertRaises(DomainError):
            approx_lambda(1.0, 'R0')
        with self.assertRaises(DomainError):
            approximation('R3')

    def test_perturbed_limit_eigenvalue_shifts_the_series(self):
        shifted = approximation('R0R1', lam0=1.01 * LAMBDA0)
        self.assertNotAlmostEqual(shifted.coefficient(2), R1_STAR, delta=1e-3)
