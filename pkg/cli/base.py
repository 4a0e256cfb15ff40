# cli/base.py
import logging

from django.core.management.base import BaseCommand, CommandError

from catalog.exceptions import SpecError
from groups.config import isolatta_setting
from groups.exceptions import GroupError
from lattice.exceptions import ParentMismatch

from .serializers import render_json

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
THEOREM_VIOLATION = 1

# everything that means "bad input", as opposed to a failed check
INPUT_ERRORS = (SpecError, GroupError, ParentMismatch, OSError)


class IsolattaCommand(BaseCommand):
    """
    Shared flags and output handling.

    Subclasses implement `run(**options)`; bad specs, bad files and
    groups over the cap leave with exit code 2.
    """
    requires_system_checks = []
    requires_migrations_checks = False

    def add_format_argument(self, parser):
        parser.add_argument('--format', choices=['human', 'json'], default='human',
                            help='Output format (default: human)')

    def add_cap_argument(self, parser):
        parser.add_argument('--cap', type=int, default=None,
                            help='Largest group order to build (default: ISOLATTA_CAP or 200)')

    def add_catalog_arguments(self, parser):
        parser.add_argument('--max-order', type=int,
                            default=isolatta_setting('DEFAULT_MAX_ORDER', 24),
                            help='Catalog bound (default: 24)')
        parser.add_argument('--extra-groups', default=None, metavar='DIR',
                            help='Directory of permutation-generator files to add to the catalog')

    def handle(self, *args, **options):
        if options.get('cap') is not None and options['cap'] < 1:
            raise CommandError('--cap must be positive', returncode=USAGE_ERROR)
        if options.get('max_order') is not None and options['max_order'] < 1:
            raise CommandError('--max-order must be positive', returncode=USAGE_ERROR)
        try:
            return self.run(**options)
        except INPUT_ERRORS as exc:
            logger.debug('[CLI] %s failed on input', self.__class__.__module__, exc_info=True)
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc

    def run(self, **options):
        raise NotImplementedError('subclasses of IsolattaCommand must provide run()')

    def emit(self, options, document, serializer_class, render_human):
        if options['format'] == 'json':
            self.stdout.write(render_json(serializer_class, document))
        else:
            self.stdout.write(render_human(document))
