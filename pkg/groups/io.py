# groups/io.py
"""
Flat-file group sources.

Cayley file:     first line n, then exactly n rows of n element indices.
Generator file:  first line the degree d, then one generator per line as
                 d space-separated images.

Blank lines are ignored; anything else that does not fit the format is
rejected with the offending line number.
"""
from pathlib import Path

from .exceptions import TableFormatError
from .permutations import PermutationGeneratorSet, build_from_perm_generators
from .table import build_from_cayley


def _numbered_lines(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise TableFormatError(path, 0, f'cannot read file: {exc.strerror or exc}') from exc
    except UnicodeDecodeError as exc:
        raise TableFormatError(path, 0, f'not UTF-8 text: byte {exc.start} is invalid') from exc
    return [(number, line.split())
            for number, line in enumerate(text.splitlines(), 1) if line.strip()]


def _ints(path, number, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise TableFormatError(path, number, f'expected integers, got {" ".join(tokens)!r}') from exc


def _header(path, lines, what):
    if not lines:
        raise TableFormatError(path, 1, f'missing {what} header')
    number, tokens = lines[0]
    values = _ints(path, number, tokens)
    if len(values) != 1 or values[0] < 1:
        raise TableFormatError(path, number, f'header must be a single positive {what}')
    return values[0]


def read_cayley_table(path):
    lines = _numbered_lines(path)
    n = _header(path, lines, 'order')
    rows = []
    for number, tokens in lines[1:]:
        if len(rows) == n:
            raise TableFormatError(path, number, f'trailing content after {n} rows')
        row = _ints(path, number, tokens)
        if len(row) != n:
            raise TableFormatError(path, number, f'expected {n} entries, got {len(row)}')
        rows.append(row)
    if len(rows) != n:
        raise TableFormatError(path, lines[-1][0], f'expected {n} rows, got {len(rows)}')
    return rows


def read_perm_generators(path):
    lines = _numbered_lines(path)
    degree = _header(path, lines, 'degree')
    generators = []
    for number, tokens in lines[1:]:
        images = _ints(path, number, tokens)
        if len(images) != degree:
            raise TableFormatError(path, number, f'expected {degree} images, got {len(images)}')
        generators.append(tuple(images))
    return PermutationGeneratorSet(degree, tuple(generators))


def load_cayley_file(path, cap=None):
    return build_from_cayley(read_cayley_table(path), label=f'cayley:{path}', cap=cap)


def load_perm_file(path, cap=None, label=None):
    gens = read_perm_generators(path)
    return build_from_perm_generators(gens, cap=cap, label=label or f'perm:{path}')
