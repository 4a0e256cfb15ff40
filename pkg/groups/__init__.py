# groups/__init__.py
from .table import GroupTable, build_from_cayley
from .permutations import (
    PermutationGeneratorSet, build_from_perm_generators, symmetric, alternating,
)
from .constructors import (
    cyclic, abelian, dihedral, dicyclic, generalized_quaternion,
    direct_product, semidirect_product, metacyclic, heisenberg,
)
from .isomorphism import is_isomorphic, find_isomorphism, greedy_generating_set

__all__ = [
    'GroupTable', 'build_from_cayley',
    'PermutationGeneratorSet', 'build_from_perm_generators', 'symmetric', 'alternating',
    'cyclic', 'abelian', 'dihedral', 'dicyclic', 'generalized_quaternion',
    'direct_product', 'semidirect_product', 'metacyclic', 'heisenberg',
    'is_isomorphic', 'find_isomorphism', 'greedy_generating_set',
]
