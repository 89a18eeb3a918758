import cmath
import itertools
import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from special.exceptions import ConvergenceError, DomainError
from special.functions import sph_h0, sph_h0_prime, sph_j0, sph_j0_prime

from .exact import (
    dispersion_residual, evaluate_mode, interface_residual, mode_coefficients,
    mode_radial_derivative, nanosphere_resonance, nanosphere_wave_number_simplified,
    resonance_exact, wave_number_exact, wave_number_symbolic,
)
from .models import ModeSource, NanoScaling, ResonanceMode, SolverConfig, SphereSpec
from .serializers import ExactQuerySerializer, ResonanceModeSerializer
from .solver import newton_solve, scan_branches

RADII = (0.5, 1.0, 2.0)
CONTRASTS = (0.5, 1.0, 3.0, 10.0)
BRANCHES = (0, 1, 2)
LN_SQRT3 = math.log(math.sqrt(3))


def grid_specs():
    for r, eta in itertools.product(RADII, CONTRASTS):
        yield SphereSpec(r, eta)


def loglog_slope(hs, errors):
    slope, _ = np.polyfit(np.log(hs), np.log(errors), 1)
    return slope


class SphereSpecTests(SimpleTestCase):
    def test_radius_must_be_positive(self):
        with self.assertRaises(DomainError):
            SphereSpec(0.0, 3.0)
        with self.assertRaises(DomainError):
            SphereSpec(-1.0, 3.0)

    def test_real_contrast_by_default(self):
        with self.assertRaises(DomainError):
            SphereSpec(1.0, 1 + 1j)
        with self.assertRaises(DomainError):
            SphereSpec(1.0, -0.5)
        self.assertEqual(SphereSpec(1.0, 1 + 1j, allow_complex=True).eta, 1 + 1j)

    def test_branch_cut_rejected_for_complex_contrast(self):
        with self.assertRaises(DomainError):
            SphereSpec(1.0, -2.0, allow_complex=True)

    def test_nano_scaling(self):
        scaling = NanoScaling(0.5, 2.0)
        self.assertEqual(scaling.eta, 8.0)
        self.assertEqual(scaling.sphere(), SphereSpec(0.5, 8.0))
        with self.assertRaises(DomainError):
            NanoScaling(0.0, 1.0)
        with self.assertRaises(DomainError):
            NanoScaling(0.1, -1.0)


class WaveNumberTests(SimpleTestCase):
    def test_unit_ball_contrast_three(self):
        k = wave_number_exact(SphereSpec(1.0, 3.0), 0)
        self.assertAlmostEqual(k, (math.pi / 2 - 1j * LN_SQRT3) / 2, places=14)

    def test_second_branch(self):
        spec = SphereSpec(1.0, 3.0)
        k = wave_number_exact(spec, 1)
        self.assertAlmostEqual(k, (3 * math.pi / 2 - 1j * LN_SQRT3) / 2, places=14)
        self.assertLess(abs(dispersion_residual(k, spec)), 1e-12)

    def test_nanosphere_reduces_to_asinh(self):
        for h in (0.01, 0.1, 0.5, 2.0):
            k = wave_number_exact(SphereSpec(h, 1 / h ** 2), 0)
            root = math.sqrt(h * h + 1)
            expected = math.pi / (2 * root) - 1j * math.asinh(h) / root
            self.assertLess(abs(k - expected), 1e-13)
            self.assertLess(abs(nanosphere_wave_number_simplified(h) - expected), 1e-15)

    def test_general_contrast_simplified_formula(self):
        for h, eta0 in ((0.1, 2.0), (0.3, 0.5), (1.0, 4.0)):
            for m in BRANCHES:
                general = wave_number_exact(NanoScaling(h, eta0).sphere(), m)
                self.assertLess(abs(nanosphere_wave_number_simplified(h, eta0, m) - general), 1e-12)

    def test_symbolic_form_is_branch_zero(self):
        for spec in grid_specs():
            self.assertLess(abs(wave_number_symbolic(spec) - wave_number_exact(spec)), 1e-14)

    def test_zero_contrast_has_no_resonance(self):
        with self.assertRaisesMessage(DomainError, "no resonance for zero contrast"):
            wave_number_exact(SphereSpec(1.0, 0.0))

    def test_negative_branch_rejected(self):
        with self.assertRaises(DomainError):
            wave_number_exact(SphereSpec(1.0, 3.0), -1)

    def test_scaling_law(self):
        for eta in CONTRASTS:
            for m in BRANCHES:
                reference = wave_number_exact(SphereSpec(1.0, eta), m)
                for r in (0.1, 10.0):
                    scaled = wave_number_exact(SphereSpec(r, eta), m) * r
                    self.assertLess(abs(scaled - reference), 1e-14 * abs(reference))

    def test_resonances_decay(self):
        for spec in grid_specs():
            for m in BRANCHES:
                k = wave_number_exact(spec, m)
                self.assertGreater(k.real, 0)
                self.assertLess(k.imag, 0)

    def test_complex_contrast(self):
        spec = SphereSpec(1.0, 3.0 + 0.5j, allow_complex=True)
        k = wave_number_exact(spec)
        self.assertLess(abs(dispersion_residual(k, spec)), 1e-12)


class ResonanceTests(SimpleTestCase):
    def test_lambda_is_square_of_k(self):
        mode = resonance_exact(SphereSpec(1.0, 3.0))
        self.assertEqual(mode.lam, mode.k * mode.k)
        self.assertAlmostEqual(mode.lam, ((math.pi / 2 - 1j * LN_SQRT3) / 2) ** 2, places=14)
        self.assertEqual(mode.source, ModeSource.CLOSED_FORM)

    def test_closed_forms_are_certified(self):
        for spec in grid_specs():
            for m in BRANCHES:
                mode = resonance_exact(spec, m)
                self.assertLess(mode.dispersion_residual, 1e-12, f"{spec} m={m}")
                self.assertLess(mode.interface_residual, 1e-10, f"{spec} m={m}")
                self.assertTrue(mode.certified())

    def test_nanosphere_limit(self):
        mode = nanosphere_resonance(NanoScaling(1e-8, 1.0))
        self.assertLess(abs(mode.lam - math.pi ** 2 / 4), 1e-6)

    def test_nanosphere_matches_ball(self):
        for h in (1e-3, 0.1, 0.5):
            nano = nanosphere_resonance(NanoScaling(h, 2.0), 1)
            ball = resonance_exact(SphereSpec(h, 2.0 / h ** 2), 1)
            self.assertEqual(nano, ball)

    def test_simplified_resonance_pattern(self):
        for h in (0.05, 0.2, 0.5, 0.9):
            a = math.asinh(h)
            d = h * h + 1
            expected = math.pi ** 2 / (4 * d) - a * a / d - 1j * math.pi * a / d
            self.assertLess(abs(nanosphere_resonance(NanoScaling(h, 1.0)).lam - expected), 1e-13)

    def test_half_scale_value(self):
        lam = nanosphere_resonance(NanoScaling(0.5, 1.0)).lam
        expected = (math.pi / 2 - 1j * math.asinh(0.5)) ** 2 / 1.25
        self.assertLess(abs(lam - expected), 1e-14)

    def test_first_order_error_is_quadratic(self):
        hs = np.logspace(-4, -1, 13)
        errors = [
            abs(nanosphere_resonance(NanoScaling(h, 1.0)).lam - math.pi ** 2 / 4 + 1j * math.pi * h)
            for h in hs
        ]
        self.assertAlmostEqual(loglog_slope(hs, errors), 2.0, delta=0.1)


class ResidualTests(SimpleTestCase):
    def test_off_resonance(self):
        self.assertGreater(abs(interface_residual(1.0, SphereSpec(1.0, 3.0))), 1e-3)

    def test_interface_pole(self):
        with self.assertRaises(DomainError):
            interface_residual(0, SphereSpec(1.0, 3.0))

    def test_interface_and_dispersion_forms_are_proportional(self):
        for spec in grid_specs():
            s = spec.index
            for k in (0.3 + 0.1j, 1.7 - 0.4j, 2.5 + 0.0j):
                expected = -cmath.exp(1j * k * spec.radius) * dispersion_residual(k, spec) / (
                    s * k * k * spec.radius ** 2
                )
                actual = interface_residual(k, spec)
                self.assertLess(abs(actual - expected), 1e-12 * max(1.0, abs(expected)))

    def test_vacuum_contrast(self):
        spec = SphereSpec(1.0, 0.0)
        for k in (0.5, 1 - 1j, 3 + 2j):
            expected = 1j * cmath.exp(-1j * k)
            self.assertLess(abs(dispersion_residual(k, spec) - expected), 1e-14 * abs(expected))

    def test_no_real_roots(self):
        for spec in grid_specs():
            for k in np.linspace(0.0, 20.0, 401):
                self.assertGreaterEqual(abs(dispersion_residual(k, spec)), 1 - 1e-12)


class ModeFieldTests(SimpleTestCase):
    def setUp(self):
        self.spec = SphereSpec(1.0, 3.0)
        self.mode = resonance_exact(self.spec)

    def test_golden_exterior_amplitude(self):
        a, b = mode_coefficients(self.mode, self.spec)
        self.assertEqual(a, 1)
        # sin(k s r) = 2 / sqrt(3) and exp(i k r) = 3**(1/4) exp(i pi / 4) at this root
        self.assertLess(abs(b - 3 ** -0.75 * cmath.exp(0.25j * math.pi)), 1e-14)

    def test_interface_conditions(self):
        for spec in grid_specs():
            for m in BRANCHES:
                mode = resonance_exact(spec, m)
                a, b = mode_coefficients(mode, spec)
                s = spec.index
                z = mode.k * spec.radius
                self.assertLess(abs(a * sph_j0(z * s) - b * sph_h0(z)), 1e-14 * abs(b * sph_h0(z)))
                self.assertLess(abs(s * a * sph_j0_prime(z * s) - b * sph_h0_prime(z)), 1e-10)

    def test_field_is_bounded_at_centre(self):
        self.assertEqual(evaluate_mode(self.mode, self.spec, 0.0), 1)

    def test_field_is_continuous(self):
        _, b = mode_coefficients(self.mode, self.spec)
        inside = evaluate_mode(self.mode, self.spec, 1.0)
        outside = b * sph_h0(self.mode.k)
        self.assertLess(abs(inside - outside), 1e-12)
        self.assertLess(abs(evaluate_mode(self.mode, self.spec, 1.0 + 1e-12) - inside), 1e-10)

    def test_radial_derivative_is_continuous(self):
        inner = mode_radial_derivative(self.mode, self.spec, 1.0, side='inside')
        outer = mode_radial_derivative(self.mode, self.spec, 1.0, side='outside')
        self.assertLess(abs(inner - outer), 1e-10)

    def test_one_sided_differences_match(self):
        f = lambda rho: evaluate_mode(self.mode, self.spec, rho)
        delta = 1e-5
        left = (3 * f(1.0) - 4 * f(1.0 - delta) + f(1.0 - 2 * delta)) / (2 * delta)
        right = (-3 * f(1.0) + 4 * f(1.0 + delta) - f(1.0 + 2 * delta)) / (2 * delta)
        analytic = mode_radial_derivative(self.mode, self.spec, 1.0)
        self.assertLess(abs(left - analytic), 1e-8)
        self.assertLess(abs(right - analytic), 1e-8)

    def test_negative_radius(self):
        with self.assertRaises(DomainError):
            evaluate_mode(self.mode, self.spec, -0.1)

    def test_uncertified_mode_rejected(self):
        bogus = ResonanceMode(k=1.0, lam=1.0, branch_m=0, interface_residual=0.6, dispersion_residual=1.2)
        with self.assertRaises(DomainError):
            mode_coefficients(bogus, self.spec)


class NewtonTests(SimpleTestCase):
    def test_converges_from_perturbed_seed(self):
        spec = SphereSpec(1.0, 3.0)
        k0 = wave_number_exact(spec)
        mode = newton_solve(k0 + (0.1 + 0.1j), spec, SolverConfig())
        self.assertLess(abs(mode.k - k0), 1e-12)
        self.assertEqual(mode.source, ModeSource.NEWTON)
        self.assertEqual(mode.branch_m, 0)

    def test_exact_seed_returns_immediately(self):
        spec = SphereSpec(1.0, 3.0)
        mode = newton_solve(wave_number_exact(spec), spec)
        self.assertLessEqual(mode.iterations, 2)
        self.assertLess(mode.dispersion_residual, 1e-14)

    def test_vacuum_contrast_does_not_converge(self):
        with self.assertRaises(ConvergenceError):
            newton_solve(1.0 + 0.1j, SphereSpec(1.0, 0.0), SolverConfig())

    def test_zero_seed(self):
        with self.assertRaises(DomainError):
            newton_solve(0, SphereSpec(1.0, 3.0))

    def test_oracle_agreement_on_grid(self):
        cfg = SolverConfig()
        for spec in grid_specs():
            for m in BRANCHES:
                k0 = wave_number_exact(spec, m)
                mode = newton_solve(k0 + cfg.seed_offset, spec, cfg)
                self.assertLess(abs(mode.k - k0), 1e-11, f"{spec} m={m}")
                self.assertEqual(mode.branch_m, m)
                self.assertLess(mode.dispersion_residual, cfg.tol)
                self.assertLess(mode.interface_residual, 100 * cfg.tol)

    def test_config_validation(self):
        with self.assertRaises(DomainError):
            SolverConfig(tol=0.0)
        with self.assertRaises(DomainError):
            SolverConfig(max_iter=0)

    @override_settings(RESONANCE={
        'SOLVER_TOL': 1e-12, 'SOLVER_MAX_ITER': 30, 'SOLVER_SEED_OFFSET': 0.05j, 'SOLVER_STEP_TOL': 1e-9,
    })
    def test_config_from_settings(self):
        cfg = SolverConfig.from_settings(max_iter=10)
        self.assertEqual((cfg.tol, cfg.max_iter, cfg.seed_offset), (1e-12, 10, 0.05j))


class BranchScanTests(SimpleTestCase):
    def test_branch_spacing(self):
        modes = scan_branches(SphereSpec(1.0, 3.0), 2, SolverConfig())
        self.assertEqual(len(modes), 3)
        for lower, upper in zip(modes, modes[1:]):
            self.assertAlmostEqual(upper.k.real - lower.k.real, math.pi / 2, delta=1e-10)
            self.assertAlmostEqual(upper.k.imag, lower.k.imag, delta=1e-10)
        self.assertEqual([mode.branch_m for mode in modes], [0, 1, 2])

    def test_single_branch_matches_closed_form(self):
        spec = SphereSpec(1.0, 3.0)
        (mode,) = scan_branches(spec, 0)
        self.assertLess(abs(mode.k - resonance_exact(spec).k), 1e-12)

    def test_deterministic_and_thread_independent(self):
        spec = SphereSpec(2.0, 10.0)
        serial = scan_branches(spec, 4, SolverConfig())
        again = scan_branches(spec, 4, SolverConfig())
        threaded = scan_branches(spec, 4, SolverConfig(workers=3))
        self.assertEqual(serial, again)
        self.assertEqual([mode.k for mode in serial], [mode.k for mode in threaded])

    def test_vacuum_contrast_scan_fails(self):
        with self.assertRaises(ConvergenceError):
            scan_branches(SphereSpec(1.0, 0.0), 0)

    def test_large_balls_recover_closed_forms(self):
        for r in (10.0, 100.0):
            spec = SphereSpec(r, 3.0)
            modes = scan_branches(spec, 2)
            self.assertEqual([mode.branch_m for mode in modes], [0, 1, 2], r)
            for m, mode in enumerate(modes):
                self.assertLess(abs(mode.k - wave_number_exact(spec, m)), 1e-11, f'r={r} m={m}')

    def test_strong_contrast(self):
        spec = SphereSpec(1.0, 1e4)
        modes = scan_branches(spec, 2)
        self.assertEqual([mode.branch_m for mode in modes], [0, 1, 2])
        for m, mode in enumerate(modes):
            self.assertLess(abs(mode.k - wave_number_exact(spec, m)), 1e-11)

    def test_branch_jump_is_an_error(self):
        # an offset of pi in k r s lands exactly on the next branch
        with self.assertRaises(ConvergenceError):
            scan_branches(SphereSpec(1.0, 3.0), 0, SolverConfig(seed_offset=math.pi))


class SerializerTests(SimpleTestCase):
    def test_mode_payload(self):
        data = ResonanceModeSerializer(resonance_exact(SphereSpec(1.0, 3.0))).data
        self.assertEqual(set(data['lambda']), {'re', 'im'})
        self.assertAlmostEqual(data["k"]["re"], math.pi / 4, places=14)
        self.assertEqual(data['source'], 'closed_form')
        self.assertTrue(data['certified'])
        strict = ResonanceModeSerializer(resonance_exact(SphereSpec(1.0, 3.0)), context={'threshold': 0.0}).data
        self.assertFalse(strict['certified'])

    def test_exactly_one_parameter_group(self):
        self.assertTrue(ExactQuerySerializer(data={'r': 1, 'eta': '3'}).is_valid())
        self.assertTrue(ExactQuerySerializer(data={'h': 0.5, 'eta0': 1}).is_valid())
        self.assertFalse(ExactQuerySerializer(data={'r': 1, 'eta': 3, 'h': 0.5}).is_valid())
        self.assertFalse(ExactQuerySerializer(data={'r': 1}).is_valid())
        self.assertFalse(ExactQuerySerializer(data={'r': 1, 'eta': 'abc'}).is_valid())
