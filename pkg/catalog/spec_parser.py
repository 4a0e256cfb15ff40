# catalog/spec_parser.py
"""
Group expressions.

    spec    := term ('x' term)*
    term    := 'C' INT | 'A(' INT (',' INT)* ')' | 'D' INT | 'Q' INT
             | 'Dic' INT | 'S' INT | 'Alt' INT | 'M(' m ',' k ',' r ')'
             | 'Heis' p | 'cayley:' PATH | 'perm:' PATH | '(' spec ')'

Orders are written as group orders: D8 is the dihedral group of order 8,
Q16 the generalized quaternion group of order 16, Dic12 the dicyclic
group of order 12. M(m,k,r) is C_m x| C_k with the generator of C_k acting
as x -> r*x; Heis p is the non-abelian group of order p^3 and exponent p.
A path runs up to the next whitespace or parenthesis, so a file source
followed by a product needs a space: "perm:s4.txt x C2".
"""
from dataclasses import dataclass, field
from functools import reduce

import pyparsing as pp

from groups import (
    abelian, alternating, cyclic, dicyclic, dihedral, direct_product,
    generalized_quaternion, heisenberg, metacyclic, symmetric,
)
from groups.config import order_cap
from groups.exceptions import InvalidParameter, NotAHomomorphism, NotAnAutomorphism
from groups.io import load_cayley_file, load_perm_file

from .exceptions import SpecEvaluationError, SpecSyntaxError

BRACKETED = {'A', 'M'}


@dataclass(frozen=True)
class Family:
    name: str
    args: tuple
    position: int = field(default=0, compare=False)

    def render(self):
        if self.name in BRACKETED:
            return f'{self.name}({",".join(map(str, self.args))})'
        return f'{self.name}{self.args[0]}'


@dataclass(frozen=True)
class FileSource:
    kind: str
    path: str
    position: int = field(default=0, compare=False)

    def render(self):
        return f'{self.kind}:{self.path}'


@dataclass(frozen=True)
class Product:
    factors: tuple
    position: int = field(default=0, compare=False)

    def render(self):
        return 'x'.join(
            f'({f.render()})' if isinstance(f, Product) else f.render() for f in self.factors)


def _family(name):
    def action(s, loc, toks):
        return Family(name, tuple(toks[1:]), loc)
    return action


def _grammar():
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0])).set_name('integer')
    lpar, rpar = pp.Suppress('('), pp.Suppress(')')

    def single(keyword):
        return (pp.Literal(keyword) + integer).set_parse_action(_family(keyword))

    def bracketed(keyword):
        return (pp.Literal(keyword) + lpar + pp.DelimitedList(integer) + rpar
                ).set_parse_action(_family(keyword))

    path = pp.Regex(r'[^\s()]+').set_name('path')
    source = ((pp.Literal('cayley:') | pp.Literal('perm:')) + path).set_parse_action(
        lambda s, loc, t: FileSource(t[0][:-1], t[1], loc))

    spec = pp.Forward()
    # longer keywords first: Alt before A, Dic before D
    term = (source | single('Alt') | single('Dic') | single('Heis')
            | bracketed('A') | bracketed('M')
            | single('C') | single('D') | single('Q') | single('S')
            | lpar + spec + rpar).set_name('group term')
    product = (term + pp.ZeroOrMore(pp.Suppress('x') - term)).set_parse_action(
        lambda s, loc, t: t[0] if len(t) == 1 else Product(tuple(t), loc))
    spec <<= product
    return spec


GRAMMAR = _grammar()


def parse_spec(text):
    """GroupSpec AST for text, or SpecSyntaxError naming the position and what was expected"""
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise SpecSyntaxError(exc.loc, exc.msg) from None


def _power_of_two_exponent(n):
    k = n.bit_length() - 1
    return k if n > 0 and 1 << k == n else None


def _build_family(node, cap):
    name, args = node.name, node.args
    if name != 'A' and len(args) != (3 if name == 'M' else 1):
        raise SpecEvaluationError(node.position, f'{name} takes {"3 arguments" if name == "M" else "one argument"}')
    n = args[0]
    if name == 'C':
        return cyclic(n, cap=cap)
    if name == 'A':
        return abelian(args, cap=cap)
    if name == 'D':
        if n < 2 or n % 2:
            raise SpecEvaluationError(node.position, f'D{n}: dihedral order must be even and >= 2')
        return dihedral(n // 2, cap=cap)
    if name == 'Q':
        k = _power_of_two_exponent(n)
        if k is None or k < 3:
            raise SpecEvaluationError(node.position, f'Q{n}: order must be a power of 2, at least 8')
        return generalized_quaternion(k, cap=cap)
    if name == 'Dic':
        if n < 4 or n % 4:
            raise SpecEvaluationError(node.position, f'Dic{n}: order must be a multiple of 4')
        return dicyclic(n // 4, cap=cap)
    if name == 'S':
        return symmetric(n, cap=cap)
    if name == 'Alt':
        return alternating(n, cap=cap)
    if name == 'M':
        return metacyclic(*args, cap=cap)
    if name == 'Heis':
        return heisenberg(n, cap=cap)
    raise SpecEvaluationError(node.position, f'unknown family {name}')


def evaluate_spec(spec, cap=None):
    """
    Build the GroupTable a spec describes, labeled with its canonical
    rendering. OrderCapExceeded and file errors propagate unchanged.
    """
    limit = order_cap(cap)
    if isinstance(spec, Product):
        factors = [evaluate_spec(f, cap=limit) for f in spec.factors]
        group = reduce(lambda a, b: direct_product(a, b, cap=limit), factors)
        return group.relabel(spec.render())
    if isinstance(spec, FileSource):
        if spec.kind == 'cayley':
            return load_cayley_file(spec.path, cap=limit)
        return load_perm_file(spec.path, cap=limit)
    try:
        group = _build_family(spec, limit)
    except (InvalidParameter, NotAnAutomorphism, NotAHomomorphism) as exc:
        raise SpecEvaluationError(spec.position, str(exc)) from exc
    return group.relabel(spec.render())


def build_group(text, cap=None):
    return evaluate_spec(parse_spec(text), cap=cap)
