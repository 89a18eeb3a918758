import cmath
import math

import numpy as np
from django.test import SimpleTestCase
from scipy.special import spherical_jn, spherical_yn

from .exceptions import DomainError, NonFiniteError
from .functions import (
    principal_log, principal_sqrt, sph_h0, sph_h0_prime, sph_j0, sph_j0_prime,
    sph_j0_prime_series, sph_j0_series,
)
from .quadrature import adaptive_integrate, gauss_legendre, integrate, tensor_gauss, triangle_gauss


def central_difference(f, z, delta=1e-5):
    return (f(z + delta) - f(z - delta)) / (2 * delta)


def complex_grid():
    for radius in (0.1, 0.5, 1.0, 2.5, 5.0, 10.0):
        for angle in np.linspace(-0.9 * math.pi, 0.9 * math.pi, 7):
            yield cmath.rect(radius, angle)


class BesselTests(SimpleTestCase):
    def test_j0_removable_limit(self):
        self.assertEqual(sph_j0(0), 1)

    def test_j0_at_pi(self):
        self.assertLess(abs(sph_j0(math.pi)), 1e-15)

    def test_j0_imaginary_unit(self):
        self.assertAlmostEqual(sph_j0(1j), math.sinh(1), places=12)
        self.assertAlmostEqual(sph_j0_series(1j), math.sinh(1), places=12)

    def test_j0_prime_values(self):
        self.assertEqual(sph_j0_prime(0), 0)
        self.assertAlmostEqual(sph_j0_prime(math.pi / 2), -4 / math.pi ** 2, places=14)

    def test_j0_prime_matches_central_difference(self):
        z = 1 + 0.5j
        self.assertLess(abs(sph_j0_prime(z) - central_difference(sph_j0, z)), 1e-8)

    def test_series_and_direct_formula_agree(self):
        for modulus in (1e-8, 1e-5, 1e-3, 0.1, 0.5, 1.0):
            for angle in (0.0, 0.7, 2.0, -1.3):
                z = cmath.rect(modulus, angle)
                direct = cmath.sin(z) / z
                self.assertLess(abs(sph_j0_series(z) - direct), 1e-12 * abs(direct))

    def test_derivative_series_and_direct_formula_agree(self):
        # the direct derivative loses ~|z|**-2 digits, so only moderate |z|
        for modulus in (0.1, 0.3, 0.5, 1.0):
            for angle in (0.0, 0.7, 2.0, -1.3):
                z = cmath.rect(modulus, angle)
                direct = (z * cmath.cos(z) - cmath.sin(z)) / z ** 2
                self.assertLess(abs(sph_j0_prime_series(z) - direct), 1e-12 * abs(direct))

    def test_j0_agrees_with_scipy(self):
        for z in complex_grid():
            self.assertLess(abs(sph_j0(z) - spherical_jn(0, z)), 1e-12 * max(1.0, abs(sph_j0(z))))
            expected = spherical_jn(0, z, derivative=True)
            self.assertLess(abs(sph_j0_prime(z) - expected), 1e-12 * max(1.0, abs(expected)))


class HankelTests(SimpleTestCase):
    def test_h0_values(self):
        self.assertAlmostEqual(sph_h0(math.pi / 2), 2 / math.pi, places=15)
        self.assertAlmostEqual(sph_h0(math.pi), 1j / math.pi, places=15)

    def test_h0_pole(self):
        with self.assertRaises(DomainError):
            sph_h0(0)
        with self.assertRaises(DomainError):
            sph_h0_prime(0)

    def test_h0_prime_values(self):
        self.assertAlmostEqual(sph_h0_prime(1j), -2j / math.e, places=14)
        expected = -4 / math.pi ** 2 + 2j / math.pi
        self.assertAlmostEqual(sph_h0_prime(math.pi / 2), expected, places=14)

    def test_h0_prime_matches_central_difference(self):
        z = 2 - 0.3j
        self.assertLess(abs(sph_h0_prime(z) - central_difference(sph_h0, z)), 1e-8)

    def test_h0_agrees_with_scipy(self):
        for z in complex_grid():
            expected = spherical_jn(0, z) + 1j * spherical_yn(0, z)
            self.assertLess(abs(sph_h0(z) - expected), 1e-12 * max(1.0, abs(expected)))

    def test_overflow_is_reported(self):
        with self.assertRaises(NonFiniteError):
            sph_h0(-1000j)

    def test_wronskian(self):
        # j0 h0' - j0' h0 = i / z**2 since h0 = j0 + i y0 and W[j0, y0] = 1 / z**2
        for z in complex_grid():
            wronskian = sph_j0(z) * sph_h0_prime(z) - sph_j0_prime(z) * sph_h0(z)
            expected = 1j / z ** 2
            self.assertLess(abs(wronskian - expected), 1e-10 * abs(expected))

    def test_cauchy_riemann(self):
        delta = 1e-6
        for func in (sph_j0, sph_j0_prime, sph_h0, sph_h0_prime):
            for z in (0.7 + 0.2j, 1.5 - 0.4j, -2.0 + 1.0j):
                d_dx = (func(z + delta) - func(z - delta)) / (2 * delta)
                d_dy = (func(z + 1j * delta) - func(z - 1j * delta)) / (2 * delta)
                self.assertLess(abs(d_dx.real - d_dy.imag), 1e-6, func.__name__)
                self.assertLess(abs(d_dx.imag + d_dy.real), 1e-6, func.__name__)


class BranchTests(SimpleTestCase):
    def test_sqrt(self):
        self.assertEqual(principal_sqrt(4), 2)
        self.assertGreaterEqual(principal_sqrt(-4 - 1e-300j).real, 0)

    def test_log(self):
        self.assertAlmostEqual(principal_log(1j), 0.5j * math.pi, places=15)
        split = principal_log(1j * (math.sqrt(2) + 1))
        self.assertAlmostEqual(split.real, math.log(math.sqrt(2) + 1), places=15)
        self.assertAlmostEqual(split.imag, math.pi / 2, places=15)

    def test_log_of_zero(self):
        with self.assertRaises(DomainError):
            principal_log(0)

    def test_sqrt_and_log_invert(self):
        for z in complex_grid():
            self.assertLess(abs(principal_sqrt(z) ** 2 - z), 1e-14 * abs(z))
            self.assertLess(abs(cmath.exp(principal_log(z)) - z), 1e-14 * abs(z))


class QuadratureTests(SimpleTestCase):
    def test_polynomials_are_exact(self):
        x, w = gauss_legendre(8, -1.0, 3.0)
        self.assertAlmostEqual(float(np.dot(w, x ** 15)), (3.0 ** 16 - 1.0) / 16, delta=1e-6)

    def test_integrate_sine(self):
        self.assertAlmostEqual(integrate(np.sin, 0.0, math.pi), 2.0, places=14)
        self.assertAlmostEqual(adaptive_integrate(np.sin, 0.0, math.pi), 2.0, places=14)

    def test_tensor_rule(self):
        xx, yy, ww = tensor_gauss(10, (0.0, 2.0), (1.0, 3.0))
        self.assertAlmostEqual(float(np.dot(ww, xx * yy)), 8.0, places=12)

    def test_triangle_rules_partition_the_square(self):
        f = lambda x, y: np.exp(x) * np.cos(y)
        upper = triangle_gauss(16, upper=True)
        lower = triangle_gauss(16, upper=False)
        total = sum(float(np.dot(w, f(x, y))) for x, y, w in (upper, lower))
        self.assertAlmostEqual(total, (math.e - 1) * math.sin(1), places=13)
        x, y, w = upper
        self.assertAlmostEqual(float(np.dot(w, x * y)), 1 / 8, places=14)
        self.assertTrue(np.all(x <= y))

    def test_order_must_be_positive(self):
        with self.assertRaises(ValueError):
            gauss_legendre(0)
