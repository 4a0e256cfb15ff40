# classifier/recognizers.py
import logging

from sympy import factorint

from groups import cyclic, direct_product, generalized_quaternion, is_isomorphic

from .tags import CYCLIC_KINDS, StructureTag, TagKind

logger = logging.getLogger(__name__)


def factorize(n):
    """Sorted prime factors of n with multiplicity; factorize(1) == ()"""
    return tuple(p for p, e in sorted(factorint(n).items()) for _ in range(e))


def is_cyclic(group):
    # an element of order |G| is its own certificate
    return max(group.orders) == group.order


def _involutions(group):
    return sum(1 for o in group.orders if o == 2)


def _two_power_exponent(n):
    factors = factorint(n)
    if set(factors) == {2}:
        return factors[2]
    return None


def is_generalized_quaternion(group):
    k = _two_power_exponent(group.order)
    if k is None or k < 3 or _involutions(group) != 1 or is_cyclic(group):
        return False
    return is_isomorphic(group, generalized_quaternion(k, cap=group.order))


def _odd_cyclic_times_quaternion(group):
    """(p, m, k) when G = Z_{p^m} x Q_{2^k} with p odd, else None"""
    factors = factorint(group.order)
    k = factors.pop(2, 0)
    if k < 3 or len(factors) != 1:
        return None
    (p, m), = factors.items()
    odd = p ** m
    # a direct product Z_{p^m} x Q_{2^k} has exactly p^m odd-order elements
    # and 2^k elements of 2-power order
    odd_elements = sum(1 for o in group.orders if o % 2 == 1)
    two_elements = sum(1 for o in group.orders if o & (o - 1) == 0)
    if odd_elements != odd or two_elements != 2 ** k or _involutions(group) != 1:
        return None
    model = direct_product(cyclic(odd, cap=odd), generalized_quaternion(k, cap=2 ** k),
                           cap=group.order)
    if not is_isomorphic(group, model):
        return None
    return p, m, k


def structure_tag(group):
    n = group.order
    if n == 1:
        return StructureTag.of(TagKind.TRIVIAL)

    factors = factorint(n)
    if is_cyclic(group):
        primes = sorted(factors)
        if len(primes) == 1:
            p, e = primes[0], factors[primes[0]]
            if e == 2:
                return StructureTag.of(TagKind.CYCLIC_P_SQUARED, p=p)
            if e == 3:
                return StructureTag.of(TagKind.CYCLIC_P_CUBED, p=p)
            return StructureTag.of(TagKind.CYCLIC_PRIME_POWER, p=p, m=e)
        if len(primes) == 2:
            p, q = primes
            if factors[p] == 1 and factors[q] == 1:
                return StructureTag.of(TagKind.CYCLIC_PQ, p=p, q=q)
            return StructureTag.of(TagKind.CYCLIC_PM_QN, p=p, m=factors[p], q=q, n=factors[q])
        return StructureTag.of(TagKind.CYCLIC_OTHER, n=n)

    if is_generalized_quaternion(group):
        return StructureTag.of(TagKind.GENERALIZED_QUATERNION, n=factors[2])

    split = _odd_cyclic_times_quaternion(group)
    if split is not None:
        p, m, k = split
        return StructureTag.of(TagKind.CYCLIC_ODD_TIMES_QUATERNION, p=p, m=m, n=k)

    return StructureTag.of(TagKind.OTHER)


def _is_abelian_p_group_without_exponent_one(group):
    """Abelian p-group whose cyclic factors all have order at least p^2"""
    factors = factorint(group.order)
    if len(factors) != 1 or not group.is_abelian:
        return False
    (p, _), = factors.items()
    # every factor has exponent >= 2 iff every element of order p is a p-th power
    pth_powers = {group.power(x, p) for x in range(group.order)}
    return all(x in pth_powers for x, o in enumerate(group.orders) if o == p)


def known_isolated_simple_family(group, tag):
    """Name of the known isolated-simple family G belongs to, or None"""
    if tag.kind is TagKind.TRIVIAL or tag.kind in CYCLIC_KINDS:
        return 'cyclic'
    if tag.kind is TagKind.GENERALIZED_QUATERNION:
        return 'generalized-quaternion'
    if _is_abelian_p_group_without_exponent_one(group):
        return 'abelian-p-group'
    return None
