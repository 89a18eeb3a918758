from moments.serializers import METHOD_ALIASES, MomentEstimateSerializer, MomentQuerySerializer

from api.commands import ResonanceCommand
from api.services import moment_estimate


class Command(ResonanceCommand):
    help = 'Ball moment M_n by closed form, quadrature or Monte Carlo'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, required=True, help='Power of |x - y|')
        parser.add_argument('--method', choices=sorted(METHOD_ALIASES), default='quadrature')
        parser.add_argument('--order', type=int, help='Gauss-Legendre order per direction')
        parser.add_argument('--samples', type=int, help='Monte Carlo sample count')
        parser.add_argument('--seed', type=int, help='Monte Carlo seed')
        parser.add_argument('--shards', type=int, help='Monte Carlo substreams')
        parser.add_argument('--workers', type=int, help='Threads for the Monte Carlo shards')

    def handle(self, *args, **options):
        data = self.validated(MomentQuerySerializer, options, ('n', 'method', 'order', 'samples', 'seed', 'shards'))
        with self.exit_codes():
            estimate = moment_estimate(data, workers=options.get('workers'))
        lines = [str(estimate)]
        if estimate.shards:
            lines.append(f'seed {estimate.seed}, {estimate.shards} shards')
        self.emit(options, MomentEstimateSerializer(estimate).data, lines)
