# cli/dot.py
"""
Hasse diagram of L(G) as graphviz text.

    dot -Tpng lattice.gv -O

Nodes are labeled "order:index" and ranked by order; non-isolated
subgroups are drawn as dashed boxes.
"""
from itertools import groupby


def lattice_to_dot(lattice, report, name='lattice'):
    lines = [f'digraph "{name}" {{', '\tgraph [rankdir=BT];', '\tnode [shape=ellipse];']
    append = lines.append

    for order, members in groupby(range(len(lattice)), key=lambda i: lattice[i].order):
        append('\t{')
        append('\t\trank = same;')
        for i in members:
            style = '' if report.isolated[i] else ', shape=box, style=dashed'
            append(f'\t\t"{i}" [label="{order}:{i}"{style}];')
        append('\t}')

    for lower, upper in lattice.covers():
        append(f'\t"{lower}" -> "{upper}";')
    append('}')
    return '\n'.join(lines) + '\n'
