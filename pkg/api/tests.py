import csv
import io
import json
import math
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework.test import APIClient, APISimpleTestCase

from expansions.series import exact_lambda

from .figure import FIGURE_HEADER, figure_rows, write_csv
from .verification import run_verification


def run(*args):
    out = io.StringIO()
    call_command(*args, stdout=out, stderr=io.StringIO())
    return out.getvalue()


def field(output, prefix):
    for line in output.splitlines():
        if line.startswith(prefix):
            return line.split('=', 1)[1].strip()
    raise AssertionError(f"no line starting with {prefix!r} in {output!r}")


class ExactCommandTests(SimpleTestCase):
    def test_ball(self):
        output = run('exact', '--r', '1', '--eta', '3')
        k = complex(field(output, 'k '))
        expected = complex(math.pi / 2, -math.log(math.sqrt(3))) / 2
        self.assertAlmostEqual(k, expected, delta=1e-14)

    def test_nanosphere(self):
        payload = json.loads(run('exact', '--h', '0.5', '--eta0', '1', '--json'))
        lam = complex(payload['lambda']['re'], payload['lambda']['im'])
        self.assertAlmostEqual(lam, exact_lambda(0.5), delta=1e-13)
        self.assertEqual(payload['branch_m'], 0)
        self.assertEqual(payload['source'], 'closed_form')

    def test_zero_contrast(self):
        with self.assertRaises(CommandError) as ctx:
            run('exact', '--r', '1', '--eta', '0')
        self.assertEqual(ctx.exception.returncode, 3)
        self.assertIn('no resonance for zero contrast', str(ctx.exception))

    def test_mixed_parameter_groups(self):
        with self.assertRaises(CommandError) as ctx:
            run('exact', '--r', '1', '--eta', '3', '--h', '0.5')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('exact', '--r', '1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_complex_contrast_needs_opt_in(self):
        with self.assertRaises(CommandError) as ctx:
            run('exact', '--r', '1', '--eta', '2-0.5j')
        self.assertEqual(ctx.exception.returncode, 3)
        self.assertIn('k ', run('exact', '--r', '1', '--eta', '2-0.5j', '--allow-complex'))


class SolveCommandTests(SimpleTestCase):
    def test_branch_scan(self):
        rows = json.loads(run('solve', '--r', '1', '--eta', '3', '--m-max', '2', '--json'))
        self.assertEqual([row['branch_m'] for row in rows], [0, 1, 2])
        for row in rows:
            self.assertLess(row['closed_form_delta'], 1e-11)
            self.assertEqual(row['source'], 'newton')

    def test_zero_contrast_does_not_converge(self):
        with self.assertRaises(CommandError) as ctx:
            run('solve', '--r', '1', '--eta', '0', '--m-max', '0')
        self.assertEqual(ctx.exception.returncode, 4)

    def test_deterministic_output(self):
        args = ('solve', '--r', '2', '--eta', '10', '--m-max', '3')
        self.assertEqual(run(*args), run(*args))
        self.assertEqual(run(*args), run(*args, '--workers', '3'))

    def test_large_ball_keeps_branch_order(self):
        rows = json.loads(run('solve', '--r', '10', '--eta', '3', '--m-max', '2', '--json'))
        self.assertEqual([row['branch_m'] for row in rows], [0, 1, 2])
        self.assertLess(max(row['closed_form_delta'] for row in rows), 1e-11)

    def test_tolerance_flag(self):
        rows = json.loads(run('solve', '--r', '1', '--eta', '3', '--m-max', '0', '--tol', '1e-10', '--json'))
        self.assertLess(rows[0]['dispersion_residual'], 1e-10)
        with self.assertRaises(CommandError) as ctx:
            run('solve', '--r', '1', '--eta', '3', '--tol', '0')
        self.assertEqual(ctx.exception.returncode, 2)


class MomentsCommandTests(SimpleTestCase):
    def test_closed_form(self):
        payload = json.loads(run('moments', '--n', '1', '--method', 'closed', '--json'))
        self.assertAlmostEqual(payload['value'], 128 / math.pi ** 3, places=14)
        self.assertEqual(payload['method'], 'closed_form')

    def test_quadrature(self):
        payload = json.loads(run('moments', '--n', '2', '--method', 'quadrature', '--order', '64', '--json'))
        self.assertAlmostEqual(payload['value'], 768 / math.pi ** 5 * (math.pi ** 2 - 8), delta=1e-10)

    def test_monte_carlo_is_reproducible(self):
        args = ('moments', '--n', '1', '--method', 'mc', '--samples', '20000', '--seed', '7', '--json')
        first = json.loads(run(*args))
        self.assertEqual(first, json.loads(run(*args)))
        self.assertEqual((first['samples'], first['seed']), (20000, 7))
        self.assertGreater(first['stderr'], 0)

    def test_bad_flags(self):
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--n', '0')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--n', '1', '--method', 'quadrature', '--order', '4')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unsupported_closed_form(self):
        with self.assertRaises(CommandError) as ctx:
            run('moments', '--n', '3', '--method', 'closed')
        self.assertEqual(ctx.exception.returncode, 3)


class ExpandCommandTests(SimpleTestCase):
    def test_coefficients(self):
        payload = json.loads(run('expand', '--json'))
        self.assertEqual(set(payload), {'r0', 'r1', 'r2', 'taylor'})
        r2 = {term['power']: complex(term['value']['re'], term['value']['im']) for term in payload['r2']['terms']}
        self.assertAlmostEqual(r2[2], -1 - math.pi ** 2 / 2, delta=1e-12)
        self.assertAlmostEqual(r2[3], 1j * (19 * math.pi / 6 - math.pi ** 3 / 4), delta=1e-12)
        self.assertEqual(len(payload['taylor']['terms']), 5)

    def test_text_output(self):
        output = run('expand')
        for label in ('R0:', 'R1:', 'R2:', 'exact:'):
            self.assertIn(label, output)

    def test_order_limit(self):
        with self.assertRaises(CommandError) as ctx:
            run('expand', '--taylor-order', '9')
        self.assertEqual(ctx.exception.returncode, 2)


class FigureTests(SimpleTestCase):
    def test_header_and_rows(self):
        output = run('figure', '--h-min', '0.01', '--h-max', '0.3', '--steps', '30')
        lines = output.splitlines()
        self.assertEqual(lines[0], FIGURE_HEADER)
        self.assertEqual(len(lines), 31)
        first = [float(value) for value in lines[1].split(',')]
        self.assertEqual(first[0], 0.01)
        real_parts = first[1::2]
        self.assertLess(max(real_parts) - min(real_parts), 1e-3)
        self.assertAlmostEqual(first[1], math.pi ** 2 / 4, delta=1e-3)

    def test_r1_improves_imaginary_part(self):
        for row in figure_rows(0.01, 0.3, 30):
            self.assertLess(abs(row.exact.imag - row.r0r1.imag), abs(row.exact.imag - row.r0.imag))

    def test_full_sum_is_fourth_order(self):
        rows = figure_rows(0.01, 0.1, 10)
        constants = [abs(row.exact - row.r0r1r2) / row.h ** 4 for row in rows]
        self.assertLess(max(constants), 2 * min(constants))

    def test_csv_round_trips(self):
        buffer = io.StringIO()
        write_csv(figure_rows(0.01, 0.5, 7), buffer)
        text = buffer.getvalue()
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        reemitted = io.StringIO()
        writer = csv.writer(reemitted, lineterminator='\n')
        writer.writerow(header)
        for row in reader:
            writer.writerow([format(float(value), '.17g') for value in row])
        self.assertEqual(reemitted.getvalue(), text)
        self.assertNotIn(' ', text)

    def test_writes_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'figure.csv')
            run('figure', '--steps', '5', '--out', path)
            with open(path, encoding='utf-8') as handle:
                self.assertEqual(handle.readline().strip(), FIGURE_HEADER)

    def test_unwritable_path(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'missing', 'figure.csv')
            with self.assertRaises(CommandError) as ctx:
                run('figure', '--steps', '5', '--out', path)
        self.assertEqual(ctx.exception.returncode, 5)

    def test_invalid_range(self):
        with self.assertRaises(CommandError) as ctx:
            run('figure', '--h-min', '0.4', '--h-max', '0.2')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('figure', '--steps', '1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bounds_outside_open_interval(self):
        for args in (('--h-min', '0'), ('--h-max', '1'), ('--h-min', '-0.1')):
            with self.assertRaises(CommandError) as ctx:
                run('figure', *args)
            self.assertEqual(ctx.exception.returncode, 2, args)

    def test_single_bound_checked_against_default(self):
        with self.assertRaises(CommandError) as ctx:
            run('figure', '--h-min', '0.6')
        self.assertEqual(ctx.exception.returncode, 2)
        lines = run('figure', '--h-min', '0.2', '--steps', '3').splitlines()
        self.assertEqual(float(lines[1].split(',')[0]), 0.2)


class VerifyTests(SimpleTestCase):
    def test_suite_passes(self):
        output = run('verify')
        self.assertNotIn('FAIL', output)
        self.assertIn('checks passed', output)

    def test_perturbed_eigenvalue_fails(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', '--perturb-lambda0', '1.01', '--samples', '20000')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_report_lists_tolerances(self):
        report = run_verification(1.01, mc_samples=20000)
        self.assertFalse(report.passed)
        failed = {check.criterion for check in report.failures}
        self.assertTrue({3, 5, 6} <= failed)
        self.assertNotIn(1, failed)
        self.assertNotIn(2, failed)
        for check in report.checks:
            self.assertGreaterEqual(check.tolerance, 0)


class EndpointTests(APISimpleTestCase):
    def setUp(self):
        self.client = APIClient()

    def test_exact(self):
        response = self.client.get('/api/exact/', {'r': 1, 'eta': 3})
        self.assertEqual(response.status_code, 200)
        k = complex(response.data['k']['re'], response.data['k']['im'])
        self.assertAlmostEqual(k, complex(math.pi / 2, -math.log(math.sqrt(3))) / 2, delta=1e-14)

    def test_invalid_query(self):
        response = self.client.get('/api/exact/', {'r': 1})
        self.assertEqual(response.status_code, 400)

    def test_domain_error(self):
        response = self.client.get('/api/exact/', {'r': 1, 'eta': 0})
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.data['error'], 'DomainError')

    def test_convergence_error(self):
        response = self.client.get('/api/solve/', {'r': 1, 'eta': 0, 'm_max': 0})
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.data['error'], 'ConvergenceError')

    def test_solve(self):
        response = self.client.get('/api/solve/', {'r': 1, 'eta': 3, 'm_max': 1})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(len(response.data), 2)

    def test_moments(self):
        response = self.client.get('/api/moments/', {'n': 2, 'method': 'closed'})
        self.assertEqual(response.status_code, 200)
        self.assertAlmostEqual(response.data['value'], 768 / math.pi ** 5 * (math.pi ** 2 - 8), places=14)

    def test_expand(self):
        response = self.client.get('/api/expand/', {'max_order': 3})
        self.assertEqual(response.status_code, 200)
        self.assertEqual([term['power'] for term in response.data['r1']['terms']], [2, 3])

    def test_figure(self):
        response = self.client.get('/api/figure/', {'h_min': 0.05, 'h_max': 0.2, 'steps': 4})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(len(response.data), 4)
        self.assertEqual(response.data[0]['h'], 0.05)

    def test_figure_rejects_zero_radius(self):
        response = self.client.get('/api/figure/', {'h_min': 0, 'steps': 3})
        self.assertEqual(response.status_code, 400)

    def test_verify_rejects_bad_factor(self):
        response = self.client.get('/api/verify/', {'perturb_lambda0': -1})
        self.assertEqual(response.status_code, 400)

    def test_read_only(self):
        response = self.client.post('/api/exact/', {'r': 1, 'eta': 3})
        self.assertEqual(response.status_code, 405)
