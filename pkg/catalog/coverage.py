# catalog/coverage.py
from sympy import factorint

from groups.config import isolatta_setting

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'


def coverage_for(order):
    """
    Whether the built-in recipes list every isomorphism class of this order.

    Exhaustive: orders up to ISOLATTA['EXHAUSTIVE_SMALL_ORDERS'] (15), and
    orders p, p^2, p^3 and pq, whose class lists are forced (for odd p the
    order-p^3 classes are the three abelian ones plus M(p^2,p,1+p) and
    Heis p; for pq they are the cyclic group and, when p | q - 1, the
    metacyclic group). Everything else is sampled.
    """
    if order <= isolatta_setting('EXHAUSTIVE_SMALL_ORDERS', 15):
        return EXHAUSTIVE
    exponents = sorted(factorint(order).values())
    if len(exponents) == 1 and exponents[0] <= 3:
        return EXHAUSTIVE
    if exponents == [1, 1]:
        return EXHAUSTIVE
    return SAMPLED
