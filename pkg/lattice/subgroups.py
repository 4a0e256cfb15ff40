# lattice/subgroups.py
from dataclasses import dataclass
from functools import cached_property

from groups.masks import IDENTITY_MASK, contains, mask_members, mask_of, popcount

from .exceptions import ParentMismatch


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of `parent`, stored as a membership mask over its elements"""
    parent: object
    mask: int

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    @cached_property
    def order(self):
        return popcount(self.mask)

    @cached_property
    def members(self):
        return tuple(mask_members(self.mask))

    @property
    def sort_key(self):
        return (self.order, self.members)

    def __contains__(self, x):
        return contains(self.mask, x)

    def __le__(self, other):
        _same_parent(self, other)
        return self.mask & ~other.mask == 0

    def is_trivial(self):
        return self.mask == IDENTITY_MASK

    def is_whole(self):
        return self.order == self.parent.order

    def __repr__(self):
        return f'<Subgroup of {self.parent.label or "?"} order={self.order}>'


def _same_parent(h, k):
    if h.parent is not k.parent:
        raise ParentMismatch(h.parent, k.parent)


def trivial_subgroup(group):
    return Subgroup(group, IDENTITY_MASK)


def whole_group(group):
    return Subgroup(group, (1 << group.order) - 1)


def cyclic_subgroup(group, x):
    """<x>: the powers of x"""
    return Subgroup(group, group.cyclic_masks[x])


def intersect(h, k):
    _same_parent(h, k)
    return Subgroup(h.parent, h.mask & k.mask)


def join(h, k):
    """<H, K>: the closure of H u K under multiplication"""
    _same_parent(h, k)
    if h.order < k.order:
        h, k = k, h
    if k <= h:
        return h
    return Subgroup(h.parent, h.parent.generated_mask(h.mask, k.members))


def conjugate(group, h, g):
    """g H g^-1"""
    rows, g_inv = group.rows, group.inverses[g]
    return Subgroup(group, mask_of(rows[rows[g][x]][g_inv] for x in h.members))


def is_normal(group, h):
    if h.parent is not group:
        raise ParentMismatch(h.parent, group)
    if group.is_abelian or h.is_trivial() or h.is_whole():
        return True
    return normalizer(group, h).is_whole()


def normalizer(group, h):
    return Subgroup(group, mask_of(
        g for g in range(group.order) if conjugate(group, h, g).mask == h.mask))


def conjugates(group, h):
    """The conjugation orbit of H, in canonical (order, members) order"""
    if h.parent is not group:
        raise ParentMismatch(h.parent, group)
    orbit = {conjugate(group, h, g) for g in range(group.order)}
    return sorted(orbit, key=lambda s: s.sort_key)
