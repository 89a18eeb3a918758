"""
Acceptance checks for the whole pipeline: closed forms, the Newton solver,
the limit eigenpair, the moments, the expansion coefficients, remainder
orders and the qualitative behaviour of the partial sums.

``perturb_lambda0`` scales the limit eigenvalue wherever a check consumes
it; any factor other than one must make the suite fail.
"""
import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from expansions.models import ApproximationLevel
from expansions.series import exact_lambda, r0_series, r1_series, r2_coeffs, taylor_exact
from limits.eigenpair import LAMBDA0, first_order_coefficient, normalization, verify_limit_eigenpair
from moments.integrals import moment_closed_form, moment_quadrature
from moments.sampling import moment_monte_carlo
from resonances.exact import dispersion_residual, interface_residual, wave_number_exact
from resonances.models import SolverConfig, SphereSpec
from resonances.solver import scan_branches

from .figure import figure_rows

logger = logging.getLogger(__name__)

RADII = (0.5, 1.0, 2.0)
CONTRASTS = (0.5, 1.0, 3.0, 10.0)
BRANCHES = (0, 1, 2)
EIGENPAIR_GRID = np.linspace(1 / 33, 1.0, 33)
LEADING_SLOPE_RANGE = (1e-4, 1e-1)
FULL_SLOPE_RANGE = (3e-3, 3e-2)


@dataclass(frozen=True)
class CheckResult:
    name: str
    criterion: int
    passed: bool
    measured: float
    tolerance: float
    elapsed: float
    detail: str = ''


@dataclass
class VerificationReport:
    perturb_lambda0: float = 1.0
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]


def _grid():
    for radius in RADII:
        for eta in CONTRASTS:
            yield SphereSpec(radius, eta)


def _slope(errors, hs):
    slope, _ = np.polyfit(np.log(hs), np.log(np.abs(errors)), 1)
    return float(slope)


class Verifier:
    """Runs every check in order and collects the results into a report."""

    def __init__(self, perturb_lambda0=1.0, mc_samples=1_000_000, mc_seed=7, mc_shards=8,
                 solver_config=None, figure_range=(0.01, 0.5, 100)):
        self.lam0 = LAMBDA0 * perturb_lambda0
        self.report = VerificationReport(perturb_lambda0=perturb_lambda0)
        self.mc_samples = mc_samples
        self.mc_seed = mc_seed
        self.mc_shards = mc_shards
        self.solver_config = solver_config or SolverConfig()
        self.figure_range = figure_range

    def record(self, name, criterion, measured, tolerance, started, passed=None, detail=''):
        passed = measured < tolerance if passed is None else passed
        check = CheckResult(
            name=name, criterion=criterion, passed=bool(passed), measured=float(measured),
            tolerance=float(tolerance), elapsed=time.perf_counter() - started, detail=detail,
        )
        logger.info("%s %s: measured %.3e, tolerance %.1e", 'PASS' if check.passed else 'FAIL', name,
                    check.measured, check.tolerance)
        self.report.checks.append(check)

    def run(self):
        for check in (self.check_closed_forms, self.check_solver, self.check_eigenpair, self.check_moments,
                      self.check_coefficients, self.check_remainders, self.check_figure):
            check()
        return self.report

    def check_closed_forms(self):
        started = time.perf_counter()
        dispersion = interface = 0.0
        for spec in _grid():
            for m in BRANCHES:
                k = wave_number_exact(spec, m)
                dispersion = max(dispersion, abs(dispersion_residual(k, spec)))
                interface = max(interface, abs(interface_residual(k, spec)))
        self.record('dispersion residual of closed forms', 1, dispersion, 1e-12, started)
        self.record('interface residual of closed forms', 1, interface, 1e-10, started)

    def check_solver(self):
        started = time.perf_counter()
        worst = 0.0
        for spec in _grid():
            for mode in scan_branches(spec, max(BRANCHES), self.solver_config):
                worst = max(worst, abs(mode.k - wave_number_exact(spec, mode.branch_m)))
        self.record('Newton roots against closed forms', 2, worst, 1e-11, started)

    def check_eigenpair(self):
        started = time.perf_counter()
        residual = verify_limit_eigenpair(EIGENPAIR_GRID, lam=self.lam0)
        self.record('limit eigenpair residual', 3, residual, 1e-10, started)
        started = time.perf_counter()
        self.record('normalization of u0', 3, abs(normalization() - 1), 1e-12, started)
        started = time.perf_counter()
        self.record('first-order coefficient equals pi', 3,
                    abs(first_order_coefficient(self.lam0) - math.pi), 1e-12, started)

    def check_moments(self):
        for n in (1, 2):
            exact = moment_closed_form(n).value
            started = time.perf_counter()
            self.record(f'M{n} by quadrature', 4, abs(moment_quadrature(n).value - exact), 1e-10, started)
            started = time.perf_counter()
            estimate = moment_monte_carlo(n, self.mc_samples, self.mc_seed, self.mc_shards)
            deviation = abs(estimate.value - exact)
            self.record(f'M{n} by Monte Carlo', 4, deviation, 3 * estimate.stderr, started,
                        detail=f'{estimate.samples} samples, seed {estimate.seed}, {estimate.shards} shards')

    def check_coefficients(self):
        pi = math.pi
        started = time.perf_counter()
        r1 = r1_series(3, lam0=self.lam0)
        r2 = r2_coeffs(3, lam0=self.lam0)
        targets = (
            ('R1 h^2 coefficient', r1.coefficient(2), pi ** 2 / 4),
            ('R1 h^3 coefficient', r1.coefficient(3), 1j * (pi ** 3 / 4 - 2 * pi)),
            ('R2 h^2 coefficient', r2.coefficient(2), -1 - pi ** 2 / 2),
            ('R2 h^3 coefficient', r2.coefficient(3), 1j * (19 * pi / 6 - pi ** 3 / 4)),
        )
        for name, value, target in targets:
            self.record(name, 5, abs(value - target), 1e-12, started)
        started = time.perf_counter()
        taylor = taylor_exact(4)
        expected = (self.lam0, -1j * pi, -1 - pi ** 2 / 4, 7j * pi / 6, 4 / 3 + pi ** 2 / 4)
        worst = max(abs(taylor.coefficient(power) - value) for power, value in enumerate(expected))
        self.record('Taylor coefficients of exact resonance', 5, worst, 1e-8, started)

    def check_remainders(self):
        started = time.perf_counter()
        hs = np.logspace(*np.log10(LEADING_SLOPE_RANGE), 10)
        r0 = r0_series(self.lam0)
        slope = _slope([exact_lambda(h) - r0.evaluate(h) for h in hs], hs)
        self.record('order of the R0 remainder', 6, abs(slope - 2.0), 0.1, started, detail=f'slope {slope:.4f}')

        started = time.perf_counter()
        hs = np.logspace(*np.log10(FULL_SLOPE_RANGE), 8)
        full = r0 + r1_series(3, lam0=self.lam0) + r2_coeffs(3, lam0=self.lam0)
        slope = _slope([exact_lambda(h) - full.evaluate(h) for h in hs], hs)
        self.record('order of the R0+R1+R2 remainder', 6, abs(slope - 4.0), 0.2, started,
                    detail=f'slope {slope:.4f}')

    def check_figure(self):
        started = time.perf_counter()
        rows = figure_rows(*self.figure_range, lam0=self.lam0)
        imaginary_margin = min(
            abs(row.exact.imag - row.r0.imag) - abs(row.exact.imag - row.r0r1.imag) for row in rows
        )
        real_margin = min(
            abs(row.exact.real - row.r0r1.real) - abs(row.exact.real - row.r0.real) for row in rows
        )
        self.record('R1 improves the imaginary part', 7, -imaginary_margin, 0.0, started,
                    passed=imaginary_margin > 0, detail=f'{len(rows)} rows, level {ApproximationLevel.R0R1}')
        self.record('R1 does not improve the real part', 7, -real_margin, 0.0, started,
                    passed=real_margin >= 0, detail=f'{len(rows)} rows')


def run_verification(perturb_lambda0=1.0, **options):
    report = Verifier(perturb_lambda0, **options).run()
    logger.info("verification %s: %d of %d checks passed", 'passed' if report.passed else 'failed',
                len(report.checks) - len(report.failures), len(report.checks))
    return report
