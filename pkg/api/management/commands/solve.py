from resonances.serializers import SolvedModeSerializer, SolveQuerySerializer

from api.commands import ResonanceCommand, format_complex
from api.services import serializer_context, solved_modes


class Command(ResonanceCommand):
    help = 'Newton branch scan of the dispersion relation, compared with the closed forms'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--r', type=float, required=True, help='Ball radius')
        parser.add_argument('--eta', type=str, required=True, help='Susceptibility')
        parser.add_argument('--m-max', type=int, default=2, help='Highest branch index (default 2)')
        parser.add_argument('--allow-complex', action='store_true', help='Admit complex susceptibility')
        parser.add_argument('--workers', type=int, default=1, help='Threads for the branch scan')
        parser.add_argument('--tol', type=float, help='Absolute target for |G| (default from settings)')

    def handle(self, *args, **options):
        data = self.validated(SolveQuerySerializer, options, ('r', 'eta', 'm_max', 'allow_complex', 'tol'))
        with self.exit_codes():
            spec, rows = solved_modes(data, workers=max(1, options['workers']))
        lines = [f'{spec}: {len(rows)} modes', f"{'m':>3}  {'k':<42}{'|G|':>10}{'|F|':>10}{'iter':>6}{'delta':>10}"]
        for row in rows:
            lines.append(
                f"{row['branch_m']:>3}  {format_complex(row['k']):<42}{row['dispersion_residual']:>10.2e}"
                f"{row['interface_residual']:>10.2e}{row['iterations']:>6}{row['closed_form_delta']:>10.2e}"
            )
        self.emit(options, SolvedModeSerializer(rows, many=True, context=serializer_context()).data, lines)
