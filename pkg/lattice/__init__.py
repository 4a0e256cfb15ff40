# lattice/__init__.py
from .subgroups import (
    Subgroup, cyclic_subgroup, intersect, join, is_normal, conjugates, conjugate,
    normalizer, trivial_subgroup, whole_group,
)
from .enumeration import Lattice, all_subgroups

__all__ = [
    'Subgroup', 'cyclic_subgroup', 'intersect', 'join', 'is_normal', 'conjugates',
    'conjugate', 'normalizer', 'trivial_subgroup', 'whole_group',
    'Lattice', 'all_subgroups',
]
