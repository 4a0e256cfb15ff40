from catalog import build_catalog, search_isolated_simple
from cli.base import IsolattaCommand
from cli.reports import render_search, search_document
from cli.serializers import SearchSerializer


class Command(IsolattaCommand):
    help = 'List the isolated-simple catalog groups, marking those outside every known family'

    def add_arguments(self, parser):
        self.add_catalog_arguments(parser)
        self.add_format_argument(parser)
        self.add_cap_argument(parser)

    def run(self, **options):
        catalog = build_catalog(options['max_order'], extra_dir=options['extra_groups'],
                                cap=options['cap'])
        hits = search_isolated_simple(catalog)
        self.emit(options, search_document(catalog, hits), SearchSerializer, render_search)
