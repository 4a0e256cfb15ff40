from catalog import build_catalog
from cli.base import IsolattaCommand
from cli.reports import render_catalog


class Command(IsolattaCommand):
    help = 'List the catalog: order, iso class id, label and coverage, tab separated'

    def add_arguments(self, parser):
        self.add_catalog_arguments(parser)
        self.add_cap_argument(parser)

    def run(self, **options):
        catalog = build_catalog(options['max_order'], extra_dir=options['extra_groups'],
                                cap=options['cap'])
        self.stdout.write(render_catalog(catalog))
