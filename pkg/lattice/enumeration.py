# lattice/enumeration.py
import logging
from dataclasses import dataclass, field

from groups.masks import IDENTITY_MASK, full_mask, is_subset, mask_members

from .subgroups import Subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Lattice:
    """
    L(G): every subgroup of `group`, sorted by (order, member list).

    leq[i] is a bitmask over subgroup indices with bit j set when
    subgroup i is contained in subgroup j; index 0 is the trivial
    subgroup and the last index is G.
    """
    group: object
    subgroups: tuple
    leq: tuple
    minimal: tuple
    maximal: tuple
    _index: dict = field(repr=False)

    @classmethod
    def from_masks(cls, group, masks):
        subgroups = sorted((Subgroup(group, m) for m in set(masks)), key=lambda s: s.sort_key)
        count = len(subgroups)
        leq = tuple(
            sum(1 << j for j in range(i, count) if is_subset(subgroups[i].mask, subgroups[j].mask))
            for i in range(count))
        below = [0] * count
        for i in range(count):
            for j in mask_members(leq[i]):
                below[j] |= 1 << i
        top = count - 1
        # atoms: exactly the trivial subgroup and themselves below them
        minimal = tuple(i for i in range(1, count) if below[i] == (1 | 1 << i))
        maximal = tuple(i for i in range(count - 1) if leq[i] == (1 << i | 1 << top))
        return cls(
            group=group,
            subgroups=tuple(subgroups),
            leq=leq,
            minimal=minimal,
            maximal=maximal,
            _index={s.mask: i for i, s in enumerate(subgroups)},
        )

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i):
        return self.subgroups[i]

    def index_of(self, subgroup_or_mask):
        mask = getattr(subgroup_or_mask, 'mask', subgroup_or_mask)
        return self._index[mask]

    def __contains__(self, subgroup_or_mask):
        return getattr(subgroup_or_mask, 'mask', subgroup_or_mask) in self._index

    def is_leq(self, i, j):
        return (self.leq[i] >> j) & 1 == 1

    def meet(self, i, j):
        return self._index[self.subgroups[i].mask & self.subgroups[j].mask]

    def join(self, i, j):
        """Least common upper bound; indices are ordered by subgroup order"""
        common = self.leq[i] & self.leq[j]
        return (common & -common).bit_length() - 1

    def covers(self):
        """Hasse diagram edges (i, j): i < j with nothing strictly between"""
        count = len(self.subgroups)
        down = [0] * count
        for i in range(count):
            for j in mask_members(self.leq[i]):
                down[j] |= 1 << i
        edges = []
        for i in range(count):
            for j in mask_members(self.leq[i] & ~(1 << i)):
                between = self.leq[i] & down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    edges.append((i, j))
        return edges

    @property
    def trivial(self):
        return 0

    @property
    def top(self):
        return len(self.subgroups) - 1


def all_subgroups(group):
    """
    Enumerate L(G) completely.

    Every subgroup is a join of cyclic subgroups, so starting from the
    cyclic subgroups and joining each newly found subgroup with every
    cyclic subgroup it does not contain reaches a fixpoint that is all of
    L(G).
    """
    cyclic = {}
    for x in range(group.order):
        cyclic.setdefault(group.cyclic_masks[x], x)

    found = set(cyclic) | {IDENTITY_MASK, full_mask(group.order)}
    frontier = list(cyclic)
    rounds = 0
    while frontier:
        rounds += 1
        fresh = []
        for mask in frontier:
            for cmask, x in cyclic.items():
                if is_subset(cmask, mask):
                    continue
                joined = group.generated_mask(mask, [x])
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh

    lattice = Lattice.from_masks(group, found)
    logger.debug('[LATTICE] %s: %d subgroups after %d join rounds',
                 group.label or 'group', len(lattice), rounds)
    return lattice
