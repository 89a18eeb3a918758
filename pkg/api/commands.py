"""
Base class for the resonance management commands: shared ``--json`` and
``--out`` options, query validation through DRF serializers, and the
mapping from library exceptions to exit codes.
"""
import contextlib
import json
import logging

from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder

from special.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4
EXIT_IO = 5


def format_complex(value, digits=15):
    value = complex(value)
    return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"


class ResonanceCommand(BaseCommand):
    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Print structured JSON instead of text')
        parser.add_argument('--out', type=str, help='Write the output to this file instead of stdout')

    def validated(self, serializer_class, options, fields):
        """Validate the named command-line options with ``serializer_class``; unset options are left out."""
        data = {name: options[name] for name in fields if options.get(name) is not None}
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            raise CommandError(self.describe_errors(serializer.errors), returncode=EXIT_USAGE)
        return serializer.validated_data

    @staticmethod
    def describe_errors(errors):
        parts = []
        for name, messages in errors.items():
            label = 'arguments' if name == 'non_field_errors' else f'--{name.replace("_", "-")}'
            parts.append(f"{label}: {' '.join(str(message) for message in messages)}")
        return '; '.join(parts)

    @contextlib.contextmanager
    def exit_codes(self):
        try:
            yield
        except DomainError as exc:
            raise CommandError(str(exc), returncode=EXIT_DOMAIN) from exc
        except ConvergenceError as exc:
            logger.warning("solver failure: %s", exc)
            raise CommandError(str(exc), returncode=EXIT_CONVERGENCE) from exc

    def emit(self, options, payload, lines):
        """Write ``payload`` as JSON when --json is set, the text ``lines`` otherwise."""
        if options['json']:
            text = json.dumps(payload, cls=DjangoJSONEncoder, indent=2) + '\n'
        else:
            text = ''.join(f'{line}\n' for line in lines)
        self.write_text(options, text)

    def write_text(self, options, text):
        if not options.get('out'):
            self.stdout.write(text, ending='')
            return
        try:
            with open(options['out'], 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
        except OSError as exc:
            raise CommandError(f"cannot write {options['out']}: {exc.strerror or exc}", returncode=EXIT_IO) from exc
        self.stderr.write(self.style.SUCCESS(f"Wrote {options['out']}"))
