# groups/masks.py
"""
Element sets as Python ints: bit x is set when element x is a member.

Python ints are arbitrary-width bit vectors stored in machine-word digits,
so AND/OR/popcount on a whole subgroup is a single operation at any order
the cap allows.
"""

IDENTITY_MASK = 1


def mask_of(elements):
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def mask_members(mask):
    """Members of mask in increasing index order"""
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return members


def contains(mask, x):
    return (mask >> x) & 1 == 1


def is_subset(inner, outer):
    return inner & ~outer == 0


def popcount(mask):
    return mask.bit_count()


def full_mask(n):
    return (1 << n) - 1
