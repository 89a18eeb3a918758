from django.core.management.base import CommandError

from api.commands import EXIT_VERIFICATION_FAILED, ResonanceCommand
from api.serializers import VerificationReportSerializer, VerifyQuerySerializer
from api.services import verification_report


class Command(ResonanceCommand):
    help = 'Run the acceptance checks; exits 1 if any check fails'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--perturb-lambda0', type=float, default=1.0, metavar='FACTOR',
                            help='Scale the limit eigenvalue inside the checks (the suite must then fail)')
        parser.add_argument('--samples', type=int, help='Monte Carlo sample count')

    def handle(self, *args, **options):
        data = self.validated(VerifyQuerySerializer, options, ('perturb_lambda0', 'samples'))
        with self.exit_codes():
            report = verification_report(data)
        lines = [
            f"{'PASS' if check.passed else 'FAIL'}  [{check.criterion}] {check.name}: "
            f"{check.measured:.3e} (tolerance {check.tolerance:.1e}, {check.elapsed:.2f} s)"
            f"{'  ' + check.detail if check.detail else ''}"
            for check in report.checks
        ]
        self.emit(options, VerificationReportSerializer(report).data, lines)
        if not report.passed:
            names = ', '.join(check.name for check in report.failures)
            raise CommandError(f"verification failed: {names}", returncode=EXIT_VERIFICATION_FAILED)
        if not options['json']:
            self.stdout.write(self.style.SUCCESS(f'All {len(report.checks)} checks passed'))
