from resonances.serializers import ExactQuerySerializer, ResonanceModeSerializer

from api.commands import ResonanceCommand, format_complex
from api.services import exact_mode, serializer_context


class Command(ResonanceCommand):
    help = 'Closed-form resonance of a ball (--r, --eta) or of a nanosphere (--h, --eta0)'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--r', type=float, help='Ball radius')
        parser.add_argument('--eta', type=str, help='Susceptibility, e.g. 3 or 2-0.5j')
        parser.add_argument('--h', type=float, help='Nanosphere radius')
        parser.add_argument('--eta0', type=float, help='Nanosphere contrast constant')
        parser.add_argument('--m', type=int, default=0, help='Branch index (default 0)')
        parser.add_argument('--allow-complex', action='store_true', help='Admit complex susceptibility')

    def handle(self, *args, **options):
        data = self.validated(ExactQuerySerializer, options, ('r', 'eta', 'h', 'eta0', 'm', 'allow_complex'))
        with self.exit_codes():
            spec, mode = exact_mode(data)
        self.emit(options, ResonanceModeSerializer(mode, context=serializer_context()).data, [
            f'{spec}, branch m = {mode.branch_m}',
            f'k      = {format_complex(mode.k)}',
            f'lambda = {format_complex(mode.lam)}',
            f'|G(k)| = {mode.dispersion_residual:.3e}',
            f'|F(k)| = {mode.interface_residual:.3e}',
        ])
