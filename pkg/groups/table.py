# groups/table.py
import logging
from collections import Counter
from dataclasses import dataclass, replace
from functools import cached_property
from math import lcm

import numpy as np

from .config import order_cap
from .exceptions import (
    MalformedTable, NoIdentity, NoInverse, NotAssociative, OrderCapExceeded,
)
from .masks import IDENTITY_MASK, contains, mask_members

logger = logging.getLogger(__name__)


def _frozen(array):
    array = np.ascontiguousarray(array, dtype=np.intp)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GroupTable:
    """
    A finite group as a normalized multiplication table.

    Elements are the indices 0..n-1 and the identity is always 0;
    mul[a][b] is the index of a*b. Instances come out of
    build_from_cayley (directly or through a constructor), so every
    GroupTable satisfies the group axioms. Equality is identity: two
    tables describing the same group are compared with is_isomorphic.
    """
    mul: np.ndarray
    inv: np.ndarray
    elem_order: np.ndarray
    label: str = ''
    identity: int = 0

    @property
    def order(self):
        return int(self.mul.shape[0])

    def __repr__(self):
        return f'<GroupTable {self.label or "?"} order={self.order}>'

    def relabel(self, label):
        return replace(self, label=label)

    @cached_property
    def rows(self):
        """mul as nested tuples; scalar lookups are much faster than on numpy"""
        return tuple(map(tuple, self.mul.tolist()))

    @cached_property
    def orders(self):
        return tuple(self.elem_order.tolist())

    @cached_property
    def inverses(self):
        return tuple(self.inv.tolist())

    @cached_property
    def cyclic_masks(self):
        """cyclic_masks[x] is the member mask of <x>"""
        rows = self.rows
        masks = []
        for x in range(self.order):
            mask, y = IDENTITY_MASK, x
            while y != 0:
                mask |= 1 << y
                y = rows[y][x]
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def centralizer_orders(self):
        return tuple((self.mul == self.mul.T).sum(axis=1).tolist())

    @cached_property
    def center_order(self):
        return sum(1 for size in self.centralizer_orders if size == self.order)

    @cached_property
    def order_multiset(self):
        """Sorted (element order, count) pairs"""
        return tuple(sorted(Counter(self.orders).items()))

    @cached_property
    def exponent(self):
        return lcm(*self.orders)

    @cached_property
    def fingerprint(self):
        """Isomorphism invariants compared before any backtracking search"""
        return (self.order, self.order_multiset, self.is_abelian, self.center_order)

    def power(self, x, k):
        rows = self.rows
        result = 0
        for _ in range(k % self.orders[x]):
            result = rows[result][x]
        return result

    def generated_mask(self, base_mask, extra=()):
        """
        Mask of the subgroup generated by the subgroup `base_mask` and the
        elements `extra`.

        The result is grown one right coset H*z at a time: every
        representative is multiplied by all of H and by the extra
        elements, and a product outside the current set adds its whole
        coset.
        """
        rows = self.rows
        base = mask_members(base_mask)
        steps = base + [x for x in extra if not contains(base_mask, x)]
        mask = base_mask
        reps = [0]
        i = 0
        while i < len(reps):
            row = rows[reps[i]]
            i += 1
            for g in steps:
                z = row[g]
                if not contains(mask, z):
                    for h in base:
                        mask |= 1 << rows[h][z]
                    reps.append(z)
        return mask


def build_from_cayley(table, label='', cap=None):
    """
    Validate an n x n index table and return the normalized GroupTable.

    The identity is relabeled to index 0 (the other elements keep their
    relative order). Violations are reported in the caller's original
    indices.
    """
    try:
        arr = np.asarray(table)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(str(exc)) from exc

    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MalformedTable(f'expected a non-empty square table, got shape {arr.shape}')
    if not np.issubdtype(arr.dtype, np.integer):
        raise MalformedTable(f'entries must be integers, got {arr.dtype}')

    n = arr.shape[0]
    limit = order_cap(cap)
    if n > limit:
        raise OrderCapExceeded(n, limit)

    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise MalformedTable(f'entry ({i}, {j}) = {int(arr[i, j])} is outside [0, {n})')

    elements = np.arange(n)
    is_identity = (arr == elements).all(axis=1) & (arr == elements[:, None]).all(axis=0)
    if not is_identity.any():
        raise NoIdentity()
    e = int(np.argmax(is_identity))

    original = elements
    if e != 0:
        original = np.array([e] + [x for x in range(n) if x != e])
        new_of_old = np.empty(n, dtype=np.intp)
        new_of_old[original] = elements
        arr = new_of_old[arr[np.ix_(original, original)]]

    gives_identity = arr == 0
    two_sided = gives_identity & gives_identity.T
    has_inverse = two_sided.any(axis=1)
    if not has_inverse.all():
        raise NoInverse(int(original[np.argmin(has_inverse)]))
    inv = two_sided.argmax(axis=1)

    for a in range(n):
        # left[b, c] = (a*b)*c, right[b, c] = a*(b*c)
        left = arr[arr[a]]
        right = arr[a][arr]
        mismatch = np.argwhere(left != right)
        if len(mismatch):
            b, c = (int(v) for v in mismatch[0])
            raise NotAssociative(int(original[a]), int(original[b]), int(original[c]))

    rows = arr.tolist()
    elem_order = []
    for x in range(n):
        m, y = 1, x
        while y != 0:
            y = rows[y][x]
            m += 1
        elem_order.append(m)

    logger.debug('[GROUPS] Validated %s (order %d)', label or 'table', n)
    return GroupTable(
        mul=_frozen(arr),
        inv=_frozen(inv),
        elem_order=_frozen(elem_order),
        label=label,
    )
