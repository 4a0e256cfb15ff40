# classifier/__init__.py
from .tags import StructureTag, TagKind
from .recognizers import (
    factorize, is_cyclic, is_generalized_quaternion, known_isolated_simple_family,
    structure_tag,
)
from .theorem import (
    FactVerdict, PartVerdict, TheoremVerdict, classical_facts, theorem_predicate,
)

__all__ = [
    'StructureTag', 'TagKind',
    'factorize', 'is_cyclic', 'is_generalized_quaternion', 'known_isolated_simple_family',
    'structure_tag',
    'FactVerdict', 'PartVerdict', 'TheoremVerdict', 'classical_facts', 'theorem_predicate',
]
