# groups/permutations.py
import logging
from dataclasses import dataclass
from math import factorial

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from .config import order_cap
from .exceptions import InvalidParameter, InvalidPermutation, OrderCapExceeded
from .table import build_from_cayley

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutationGeneratorSet:
    """Permutations of {0..degree-1}; generators may be given as image lists"""
    degree: int
    generators: tuple

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidParameter(f'degree must be positive, got {self.degree}')
        perms = []
        for index, g in enumerate(self.generators):
            images = [int(v) for v in getattr(g, 'array_form', g)]
            if len(images) != self.degree:
                raise InvalidPermutation(index, f'has {len(images)} images, expected {self.degree}')
            try:
                perms.append(Permutation(images))
            except ValueError as exc:
                raise InvalidPermutation(index, 'is not a bijection on 0..degree-1') from exc
        object.__setattr__(self, 'generators', tuple(perms))


def build_from_perm_generators(gens, cap=None, label=''):
    """
    Breadth-first closure of the generators under composition.

    Elements are indexed in discovery order starting from the identity
    permutation; the closure stops with OrderCapExceeded as soon as it
    grows past the cap. `p * q` applies p first.
    """
    limit = order_cap(cap)
    identity = Permutation(list(range(gens.degree)))
    index = {identity: 0}
    elements = [identity]
    i = 0
    while i < len(elements):
        current = elements[i]
        i += 1
        for g in gens.generators:
            product = current * g
            if product not in index:
                if len(elements) >= limit:
                    raise OrderCapExceeded(len(elements) + 1, limit)
                index[product] = len(elements)
                elements.append(product)

    table = [[index[a * b] for b in elements] for a in elements]
    logger.debug('[GROUPS] Permutation closure of degree %d has order %d',
                 gens.degree, len(elements))
    return build_from_cayley(table, label=label, cap=limit)


def _named(group, d):
    # sympy models the degree-1 and degree-2 alternating groups on one point
    return tuple(g for g in group.generators if g.size == d)


def symmetric(d, cap=None):
    if d < 1:
        raise InvalidParameter(f'symmetric group needs d >= 1, got {d}')
    limit = order_cap(cap)
    if factorial(d) > limit:
        raise OrderCapExceeded(factorial(d), limit)
    gens = PermutationGeneratorSet(d, _named(SymmetricGroup(d), d))
    return build_from_perm_generators(gens, cap=limit, label=f'S{d}')


def alternating(d, cap=None):
    if d < 1:
        raise InvalidParameter(f'alternating group needs d >= 1, got {d}')
    limit = order_cap(cap)
    size = max(factorial(d) // 2, 1)
    if size > limit:
        raise OrderCapExceeded(size, limit)
    gens = PermutationGeneratorSet(d, _named(AlternatingGroup(d), d))
    return build_from_perm_generators(gens, cap=limit, label=f'Alt{d}')
