from django.core.management.base import CommandError

from catalog import build_catalog
from cli.base import THEOREM_VIOLATION, IsolattaCommand
from cli.reports import render_verification, verification_document
from cli.serializers import VerificationSerializer


class Command(IsolattaCommand):
    help = ('Check the k = 0, 1, 2 classification and the classical facts on every '
            'catalog group; exit 1 on a counterexample')

    def add_arguments(self, parser):
        self.add_catalog_arguments(parser)
        self.add_format_argument(parser)
        self.add_cap_argument(parser)

    def run(self, **options):
        catalog = build_catalog(options['max_order'], extra_dir=options['extra_groups'],
                                cap=options['cap'])
        document = verification_document(catalog)
        self.emit(options, document, VerificationSerializer, render_verification)
        if not document['ok']:
            raise CommandError(f"{len(document['failures'])} theorem violation(s)",
                               returncode=THEOREM_VIOLATION)
