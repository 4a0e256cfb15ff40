from pathlib import Path

from catalog import build_group
from cli.base import IsolattaCommand
from cli.dot import lattice_to_dot
from isolation import analyze


class Command(IsolattaCommand):
    help = 'Write the Hasse diagram of L(G) as graphviz DOT, non-isolated subgroups dashed'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Group expression')
        parser.add_argument('--out', default=None, metavar='PATH',
                            help='Output file (default: stdout)')
        self.add_cap_argument(parser)

    def run(self, **options):
        group = build_group(options['spec'], cap=options['cap'])
        lattice, report = analyze(group)
        text = lattice_to_dot(lattice, report, name=group.label.replace('"', "'"))
        if options['out']:
            Path(options['out']).write_text(text)
            self.stderr.write(f"Wrote {len(lattice)} subgroups to {options['out']}")
        else:
            self.stdout.write(text, ending='')
