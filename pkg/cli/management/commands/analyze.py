from catalog import build_group
from cli.base import IsolattaCommand
from cli.reports import analysis_document, render_analysis
from cli.serializers import AnalysisSerializer


class Command(IsolattaCommand):
    help = 'Print L(G), the isolated subgroups and the deficiency k of one group'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Group expression, e.g. "D8", "C2xQ8", "perm:s4.txt"')
        self.add_format_argument(parser)
        self.add_cap_argument(parser)

    def run(self, **options):
        group = build_group(options['spec'], cap=options['cap'])
        self.emit(options, analysis_document(group), AnalysisSerializer, render_analysis)
