from expansions.serializers import ExpandQuerySerializer, ExpansionSeriesSerializer

from api.commands import ResonanceCommand, format_complex
from api.services import expansion_bundle


class Command(ResonanceCommand):
    help = 'Coefficients of R0, R1, R2 and of the Taylor series of the exact resonance'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-order', type=int, default=3, help='Truncation order of R1 and R2')
        parser.add_argument('--taylor-order', type=int, default=4, help='Highest Taylor power')
        parser.add_argument('--eta0', type=float, default=1.0, help='Contrast constant of the Taylor series')
        parser.add_argument('--moments', choices=['exact', 'mc'], default='exact',
                            help='Moments feeding R1: closed forms and quadrature, or Monte Carlo')
        parser.add_argument('--samples', type=int, help='Monte Carlo sample count')
        parser.add_argument('--seed', type=int, help='Monte Carlo seed')

    def handle(self, *args, **options):
        data = self.validated(
            ExpandQuerySerializer, options, ('max_order', 'taylor_order', 'eta0', 'moments', 'samples', 'seed'),
        )
        with self.exit_codes():
            bundle = expansion_bundle(data)
        lines = []
        for key, series in bundle.items():
            lines.append(f'{series.label}:')
            for term in series.terms:
                error = f'  +/- {term.stderr:.2e}' if term.stderr else ''
                lines.append(f'  h^{term.power}  {format_complex(term.value)}{error}')
        payload = {key: ExpansionSeriesSerializer(series).data for key, series in bundle.items()}
        self.emit(options, payload, lines)
