# groups/isomorphism.py
import logging

import numpy as np

from .masks import IDENTITY_MASK, contains, full_mask, popcount

logger = logging.getLogger(__name__)


def greedy_generating_set(group):
    """
    Generators chosen greedily: each step adds the element whose
    addition enlarges the generated subgroup most (ties go to the higher
    element order, then the lower index).
    """
    everything = full_mask(group.order)
    # One candidate per cyclic subgroup is enough
    candidates = {}
    for x in range(group.order):
        candidates.setdefault(group.cyclic_masks[x], x)
    candidates = sorted(candidates.values(), key=lambda x: (-group.orders[x], x))

    gens = []
    current = IDENTITY_MASK
    while current != everything:
        best, best_mask = None, current
        for x in candidates:
            if contains(current, x):
                continue
            grown = group.generated_mask(current, [x])
            if popcount(grown) > popcount(best_mask):
                best, best_mask = x, grown
        gens.append(best)
        current = best_mask
    return gens


def _extend(a, b, mapping, used, gens_a, gens_b):
    """
    Close a partial homomorphism over the subgroup generated by gens_a.

    mapping is defined on a subgroup of A; the images of gens_a are
    gens_b. Returns the extended mapping, or None when the assignment is
    not a well-defined injective homomorphism.
    """
    rows_a, rows_b = a.rows, b.rows
    result = dict(mapping)
    used = set(used)
    queue = list(result)
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        image = result[x]
        for ga, gb in zip(gens_a, gens_b):
            y = rows_a[x][ga]
            target = rows_b[image][gb]
            known = result.get(y)
            if known is None:
                if target in used:
                    return None
                result[y] = target
                used.add(target)
                queue.append(y)
            elif known != target:
                return None
    return result


def find_isomorphism(a, b):
    """
    A multiplication-preserving bijection A -> B as a list (index -> image),
    or None.

    Cheap invariants are compared first (order, element-order multiset,
    abelianness, center order). Abelian groups with equal element-order
    multisets are isomorphic, so only the mapping is searched for. Otherwise
    images of a greedy generating set of A are tried among elements of B
    with the same order and centralizer size, backtracking on any relation
    the partial map breaks.
    """
    if a.order != b.order or a.fingerprint != b.fingerprint:
        return None

    gens = greedy_generating_set(a)
    signature_a = list(zip(a.orders, a.centralizer_orders))
    signature_b = list(zip(b.orders, b.centralizer_orders))
    candidates = [
        [y for y in range(b.order) if signature_b[y] == signature_a[g]]
        for g in gens
    ]

    def search(level, mapping, used, images):
        if level == len(gens):
            return mapping if len(mapping) == a.order else None
        for y in candidates[level]:
            if y in used:
                continue
            extended = _extend(a, b, mapping, used, gens[:level + 1], images + [y])
            if extended is None:
                continue
            found = search(level + 1, extended, set(extended.values()), images + [y])
            if found is not None:
                return found
        return None

    found = search(0, {0: 0}, {0}, [])
    if found is None:
        return None
    iso = [found[x] for x in range(a.order)]
    # Final certificate: iso(x*y) == iso(x)*iso(y) everywhere
    phi = np.array(iso, dtype=np.intp)
    if not np.array_equal(phi[a.mul], b.mul[np.ix_(phi, phi)]):
        logger.error('[GROUPS] Search returned a non-homomorphism for %s -> %s', a.label, b.label)
        return None
    return iso


def is_isomorphic(a, b):
    if a is b:
        return True
    if a.fingerprint != b.fingerprint:
        return False
    if a.is_abelian:
        return True
    return find_isomorphism(a, b) is not None
