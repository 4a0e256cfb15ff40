# classifier/theorem.py
"""
The classification under verification, as executable biconditionals:

    a) k = 0  <=>  G is a CP1-group
    b) k = 1  <=>  G = Z_{p^2}
    c) k = 2  <=>  G = Z_{p^3} or G = Z_{pq}

plus the three classical facts about maximal and minimal subgroups its
proof leans on.
"""
from dataclasses import dataclass

from .recognizers import is_cyclic
from .tags import CYCLIC_P_GROUP_KINDS, TagKind

PART_B_KINDS = frozenset({TagKind.CYCLIC_P_SQUARED})
PART_C_KINDS = frozenset({TagKind.CYCLIC_P_CUBED, TagKind.CYCLIC_PQ})

UNIQUE_MINIMAL_KINDS = CYCLIC_P_GROUP_KINDS | {TagKind.GENERALIZED_QUATERNION}
TWO_MINIMAL_KINDS = frozenset({
    TagKind.CYCLIC_PQ, TagKind.CYCLIC_PM_QN, TagKind.CYCLIC_ODD_TIMES_QUATERNION,
})


@dataclass(frozen=True)
class PartVerdict:
    part: str
    holds: bool
    # 'forward' when the left side holds without the right, 'backward' otherwise
    direction: str = ''
    detail: str = ''


@dataclass(frozen=True)
class TheoremVerdict:
    label: str
    tag: object
    deficiency_k: int
    is_cp1: bool
    parts: tuple

    @property
    def holds(self):
        return all(p.holds for p in self.parts)

    @property
    def failures(self):
        return [p for p in self.parts if not p.holds]


def _biconditional(part, left, right, left_text, right_text, label):
    if left == right:
        return PartVerdict(part, True)
    if left:
        return PartVerdict(part, False, 'forward',
                           f'{label}: {left_text} but not {right_text}')
    return PartVerdict(part, False, 'backward',
                       f'{label}: {right_text} but not {left_text}')


def theorem_predicate(tag, is_cp1, k, label=''):
    label = label or '?'
    return TheoremVerdict(
        label=label,
        tag=tag,
        deficiency_k=k,
        is_cp1=is_cp1,
        parts=(
            _biconditional('a', k == 0, is_cp1,
                           'k = 0', 'G is a CP1-group', label),
            _biconditional('b', k == 1, tag.kind in PART_B_KINDS,
                           'k = 1', f'G = Z_p^2 (tag {tag})', label),
            _biconditional('c', k == 2, tag.kind in PART_C_KINDS,
                           'k = 2', f'G = Z_p^3 or Z_pq (tag {tag})', label),
        ),
    )


@dataclass(frozen=True)
class FactVerdict:
    fact: str
    holds: bool
    detail: str = ''


def classical_facts(group, lattice, tag):
    """
    The three facts, evaluated on one group:

    maximal-cyclic   one or two maximal subgroups => cyclic
    unique-minimal   exactly one minimal subgroup <=> cyclic p-group or
                     generalized quaternion 2-group
    two-minimal      exactly two minimal subgroups <=> cyclic of order
                     p^m q^n, or Z_{p^m} (p odd) x generalized quaternion
    """
    label = group.label or '?'
    maximal = len(lattice.maximal)
    minimal = len(lattice.minimal)

    few_maximal = 0 < maximal <= 2
    verdicts = [FactVerdict(
        'maximal-cyclic', not few_maximal or is_cyclic(group),
        '' if not few_maximal or is_cyclic(group)
        else f'{label}: {maximal} maximal subgroups but not cyclic')]

    for fact, count, kinds in (('unique-minimal', 1, UNIQUE_MINIMAL_KINDS),
                               ('two-minimal', 2, TWO_MINIMAL_KINDS)):
        has_count = minimal == count
        in_family = tag.kind in kinds
        detail = ''
        if has_count != in_family:
            detail = (f'{label}: {minimal} minimal subgroups, tag {tag}')
        verdicts.append(FactVerdict(fact, has_count == in_family, detail))
    return verdicts
