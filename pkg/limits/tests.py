import math

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import quad

from resonances.exact import nanosphere_resonance
from resonances.models import NanoScaling
from special.exceptions import DomainError

from .eigenpair import (
    LAMBDA0, U0, U0_quadrature, first_order_coefficient, lambda0, limit_eigenpair,
    newtonian_potential_radial, normalization, u0, verify_limit_eigenpair,
)


class EigenfunctionTests(SimpleTestCase):
    def test_lambda0(self):
        self.assertEqual(lambda0(), math.pi ** 2 / 4)
        self.assertAlmostEqual(lambda0(), 2.4674011003, places=10)

    def test_nanosphere_limit(self):
        lam = nanosphere_resonance(NanoScaling(1e-4)).lam
        self.assertLess(abs(lam.real - lambda0()), 1e-6)

    def test_endpoint_values(self):
        self.assertAlmostEqual(u0(1.0), 1 / math.sqrt(2 * math.pi), places=15)
        self.assertAlmostEqual(u0(0.0), math.pi / (2 * math.sqrt(2 * math.pi)), places=15)

    def test_series_branch_is_continuous(self):
        below, above = u0(np.array([0.0063, 0.0064]))
        self.assertAlmostEqual(below, above, places=5)
        exact = math.sin(math.pi * 0.0063 / 2) / 0.0063 / math.sqrt(2 * math.pi)
        self.assertAlmostEqual(below, exact, places=14)

    def test_out_of_range(self):
        with self.assertRaises(DomainError):
            u0(1.5)
        with self.assertRaises(DomainError):
            u0(np.array([0.2, -0.1]))

    def test_normalization(self):
        self.assertAlmostEqual(normalization(), 1.0, delta=1e-12)

    def test_U0(self):
        self.assertAlmostEqual(U0(), 2.0316575, places=6)
        self.assertAlmostEqual(U0_quadrature(), U0(), delta=1e-12)
        oracle, _ = quad(lambda r: 4 * math.pi * r * r * u0(r), 0, 1, epsabs=1e-14)
        self.assertAlmostEqual(oracle, U0(), delta=1e-12)

    def test_first_order_coefficient_is_pi(self):
        self.assertAlmostEqual(first_order_coefficient(), math.pi, delta=1e-12)

    def test_first_order_term_of_nanosphere(self):
        # |lambda_h - lambda0 + i pi h| shrinks like h**2
        errors = []
        for h in (1e-2, 1e-3):
            lam = nanosphere_resonance(NanoScaling(h)).lam
            errors.append(abs(lam - LAMBDA0 + 1j * first_order_coefficient() * h))
        self.assertAlmostEqual(math.log10(errors[0] / errors[1]), 2.0, delta=0.05)

    def test_record(self):
        pair = limit_eigenpair()
        self.assertEqual(pair.lambda0, LAMBDA0)
        self.assertEqual(pair.u0(1.0), u0(1.0))


class NewtonianPotentialTests(SimpleTestCase):
    def test_uniform_density(self):
        ones = np.ones_like
        self.assertAlmostEqual(newtonian_potential_radial(ones, 1.0), 4 * math.pi / 3, places=13)
        self.assertAlmostEqual(newtonian_potential_radial(ones, 0.0), 2 * math.pi, places=13)
        # interior of a uniform ball: 2 pi (1 - r**2 / 3)
        self.assertAlmostEqual(newtonian_potential_radial(ones, 0.5), 2 * math.pi * (1 - 0.25 / 3), places=13)

    def test_radius_out_of_range(self):
        with self.assertRaises(DomainError):
            newtonian_potential_radial(np.ones_like, 1.2)

    def test_eigenpair_identity(self):
        for r in np.linspace(0.1, 0.9, 9):
            value = LAMBDA0 / (4 * math.pi) * newtonian_potential_radial(u0, r)
            self.assertAlmostEqual(value, u0(r), delta=1e-10)

    def test_verify_on_dense_grid(self):
        grid = np.linspace(1 / 33, 1.0, 33)
        self.assertLess(verify_limit_eigenpair(grid), 1e-10)

    def test_wrong_eigenvalue_is_detected(self):
        grid = np.linspace(1 / 33, 1.0, 33)
        self.assertGreater(verify_limit_eigenpair(grid, lam=1.01 * LAMBDA0), 1e-3)

    def test_wrong_eigenfunction_is_detected(self):
        grid = np.linspace(1 / 33, 1.0, 33)
        residual = verify_limit_eigenpair(grid, eigenfunction=lambda r: np.sin(np.pi * r) / r)
        self.assertGreater(residual, 1e-2)

    def test_grid_excludes_origin(self):
        with self.assertRaises(DomainError):
            verify_limit_eigenpair([0.0, 0.5])
