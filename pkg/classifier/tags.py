# classifier/tags.py
from dataclasses import dataclass
from enum import Enum


class TagKind(Enum):
    """Structure kinds in recognition order; the first match wins"""
    TRIVIAL = 'Trivial'
    CYCLIC_P_SQUARED = 'CyclicPSquared'
    CYCLIC_P_CUBED = 'CyclicPCubed'
    CYCLIC_PQ = 'CyclicPQ'
    CYCLIC_PRIME_POWER = 'CyclicPrimePower'
    CYCLIC_PM_QN = 'CyclicPmQn'
    CYCLIC_OTHER = 'CyclicOther'
    GENERALIZED_QUATERNION = 'GeneralizedQuaternion'
    CYCLIC_ODD_TIMES_QUATERNION = 'CyclicOddTimesQuaternion'
    OTHER = 'Other'


CYCLIC_KINDS = frozenset({
    TagKind.CYCLIC_P_SQUARED, TagKind.CYCLIC_P_CUBED, TagKind.CYCLIC_PQ,
    TagKind.CYCLIC_PRIME_POWER, TagKind.CYCLIC_PM_QN, TagKind.CYCLIC_OTHER,
})

CYCLIC_P_GROUP_KINDS = frozenset({
    TagKind.CYCLIC_P_SQUARED, TagKind.CYCLIC_P_CUBED, TagKind.CYCLIC_PRIME_POWER,
})


@dataclass(frozen=True)
class StructureTag:
    kind: TagKind
    parameters: tuple = ()

    @classmethod
    def of(cls, kind, **parameters):
        return cls(kind, tuple(parameters.items()))

    @property
    def params(self):
        return dict(self.parameters)

    def __str__(self):
        if not self.parameters:
            return self.kind.value
        args = ', '.join(f'{name}={value}' for name, value in self.parameters)
        return f'{self.kind.value}({args})'
