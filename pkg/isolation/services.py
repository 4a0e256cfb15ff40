# isolation/services.py
import logging
from dataclasses import dataclass

from sympy import isprime

from groups.masks import IDENTITY_MASK
from lattice import all_subgroups, conjugates, is_normal
from lattice.exceptions import ParentMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsolationReport:
    """
    Isolation status of every member of L(G).

    isolated[i] refers to lattice index i; witnesses maps each
    non-isolated index to the first element x (in index order) with
    x not in H and <x> meeting H nontrivially.
    """
    group_label: str
    lattice_size: int
    isolated_count: int
    deficiency_k: int
    isolated: tuple
    non_isolated: tuple
    witnesses: dict
    normal: dict
    is_cp1: bool
    is_isolated_simple: bool


def isolation_witness(group, h):
    """First x violating "x in H or <x> n H = 1", or None when H is isolated"""
    if h.parent is not group:
        raise ParentMismatch(h.parent, group)
    mask = h.mask
    for x, cmask in enumerate(group.cyclic_masks):
        if (mask >> x) & 1:
            continue
        if cmask & mask != IDENTITY_MASK:
            return x
    return None


def is_isolated(group, h):
    return isolation_witness(group, h) is None


def is_cp1(group):
    """Every non-identity element has prime order (the trivial group qualifies)"""
    return all(isprime(o) for o in group.orders[1:])


def _only_ends_isolated(flags):
    return not any(flags[1:-1])


def is_isolated_simple(group, lattice):
    """
    Only the trivial subgroup and G are isolated.

    "No proper isolated subgroups" is read as "no isolated subgroups other
    than 1 and G": the trivial subgroup is isolated in every group.
    """
    return _only_ends_isolated([is_isolated(group, s) for s in lattice])


def isolation_report(group, lattice):
    witnesses = {}
    flags = []
    for i, subgroup in enumerate(lattice):
        x = isolation_witness(group, subgroup)
        flags.append(x is None)
        if x is not None:
            witnesses[i] = x

    non_isolated = tuple(sorted(witnesses))
    k = len(non_isolated)
    cp1 = is_cp1(group)
    if cp1 != (k == 0):
        logger.warning('[ISOLATION] %s: CP1=%s but k=%d', group.label, cp1, k)

    return IsolationReport(
        group_label=group.label,
        lattice_size=len(lattice),
        isolated_count=len(lattice) - k,
        deficiency_k=k,
        isolated=tuple(flags),
        non_isolated=non_isolated,
        witnesses=witnesses,
        normal={i: is_normal(group, lattice[i]) for i in non_isolated},
        is_cp1=cp1,
        is_isolated_simple=_only_ends_isolated(flags),
    )


def non_isolated_closed_under_conjugation(group, lattice, report):
    """Every conjugate of a non-isolated subgroup is non-isolated too"""
    for i in report.non_isolated:
        for h in conjugates(group, lattice[i]):
            if report.isolated[lattice.index_of(h)]:
                return False
    return True


def analyze(group):
    """Lattice plus report, the pair every caller ends up needing"""
    lattice = all_subgroups(group)
    return lattice, isolation_report(group, lattice)
