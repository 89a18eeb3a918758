import io

from api.commands import ResonanceCommand
from api.figure import write_csv
from api.serializers import FigureQuerySerializer, FigureRowSerializer
from api.services import figure_data


class Command(ResonanceCommand):
    help = 'CSV of the exact nanosphere resonance and its R0, R0+R1, R0+R1+R2 approximations'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--h-min', type=float, help='Smallest radius (default from settings)')
        parser.add_argument('--h-max', type=float, help='Largest radius (default from settings)')
        parser.add_argument('--steps', type=int, help='Number of radii (default from settings)')

    def handle(self, *args, **options):
        data = self.validated(FigureQuerySerializer, options, ('h_min', 'h_max', 'steps'))
        with self.exit_codes():
            rows = figure_data(data)
        if options['json']:
            self.emit(options, FigureRowSerializer(rows, many=True).data, [])
            return
        buffer = io.StringIO()
        write_csv(rows, buffer)
        self.write_text(options, buffer.getvalue())
