# groups/constructors.py
"""
Named group families.

Every constructor assembles a raw index table with numpy and hands it to
build_from_cayley, so each result is fully validated (associativity
included) before anyone sees it.
"""
from functools import reduce
from math import gcd, prod

import numpy as np

from .config import order_cap
from .exceptions import (
    InvalidParameter, NotAHomomorphism, NotAnAutomorphism, OrderCapExceeded,
)
from .table import build_from_cayley


def _check_cap(order, cap):
    limit = order_cap(cap)
    if order > limit:
        raise OrderCapExceeded(order, limit)
    return limit


def cyclic(n, cap=None):
    """Z_n with mul[i][j] = (i + j) mod n"""
    if n < 1:
        raise InvalidParameter(f'cyclic group needs n >= 1, got {n}')
    limit = _check_cap(n, cap)
    r = np.arange(n)
    return build_from_cayley(np.add.outer(r, r) % n, label=f'C{n}', cap=limit)


def abelian(parts, cap=None):
    """Z_{parts[0]} x Z_{parts[1]} x ... with mixed-radix element indices"""
    parts = [int(p) for p in parts]
    if not parts or any(p < 1 for p in parts):
        raise InvalidParameter(f'abelian group needs positive parts, got {parts}')
    limit = _check_cap(prod(parts), cap)
    label = f'C{parts[0]}' if len(parts) == 1 else f'A({",".join(map(str, parts))})'
    group = reduce(lambda a, b: direct_product(a, b, cap=limit),
                   (cyclic(p, cap=limit) for p in parts))
    return group.relabel(label)


def dihedral(m, cap=None):
    """
    Symmetries of the m-gon, order 2m: <r, s | r^m = s^2 = 1, srs = r^-1>.

    Element r^i s^j has index i + m*j.
    """
    if m < 1:
        raise InvalidParameter(f'dihedral group needs m >= 1, got {m}')
    limit = _check_cap(2 * m, cap)
    i = np.arange(m)[:, None, None, None]
    j = np.arange(2)[None, :, None, None]
    k = np.arange(m)[None, None, :, None]
    l = np.arange(2)[None, None, None, :]
    # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j + l)
    rot = (i + np.where(j == 0, k, -k)) % m
    ref = (j + l) % 2
    table = (rot + m * ref).transpose(1, 0, 3, 2).reshape(2 * m, 2 * m)
    return build_from_cayley(table, label=f'D{2 * m}', cap=limit)


def dicyclic(m, cap=None):
    """
    Dic_m of order 4m: <a, b | a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1>.

    Element a^i b^j has index i + 2m*j.
    """
    if m < 1:
        raise InvalidParameter(f'dicyclic group needs m >= 1, got {m}')
    limit = _check_cap(4 * m, cap)
    n = 2 * m
    i = np.arange(n)[:, None, None, None]
    j = np.arange(2)[None, :, None, None]
    k = np.arange(n)[None, None, :, None]
    l = np.arange(2)[None, None, None, :]
    # b a^k = a^-k b, and b b = a^m
    rot = np.where(j == 0, i + k, i - k + np.where(l == 1, m, 0)) % n
    ref = (j + l) % 2
    table = (rot + n * ref).transpose(1, 0, 3, 2).reshape(4 * m, 4 * m)
    return build_from_cayley(table, label=f'Dic{4 * m}', cap=limit)


def generalized_quaternion(n, cap=None):
    """
    Q_{2^n}: <a, b | a^(2^(n-2)) = b^2, a^(2^(n-1)) = 1, b^-1 a b = a^-1>.

    This is the dicyclic group with m = 2^(n-2); elements are a^i b^j with
    0 <= i < 2^(n-1) and j in {0, 1}.
    """
    if n < 3:
        raise InvalidParameter(f'generalized quaternion group needs n >= 3, got {n}')
    return dicyclic(2 ** (n - 2), cap=cap).relabel(f'Q{2 ** n}')


def direct_product(a, b, cap=None):
    """A x B; the pair (x, y) has index x*|B| + y"""
    na, nb = a.order, b.order
    limit = _check_cap(na * nb, cap)
    table = (a.mul[:, None, :, None] * nb + b.mul[None, :, None, :]).reshape(na * nb, na * nb)
    return build_from_cayley(table, label=_product_label(a.label, b.label), cap=limit)


def _product_label(left, right):
    return f'{left or "?"}x{right or "?"}'


def _check_action(n, h, phi):
    for x, image in enumerate(phi):
        if sorted(image.tolist()) != list(range(n.order)):
            raise NotAnAutomorphism(x, 'not a bijection')
        # phi(a*b) == phi(a)*phi(b) for all a, b
        if not np.array_equal(image[n.mul], n.mul[np.ix_(image, image)]):
            raise NotAnAutomorphism(x, 'does not preserve multiplication')
    for h1 in range(h.order):
        for h2 in range(h.order):
            if not np.array_equal(phi[h.mul[h1, h2]], phi[h1][phi[h2]]):
                raise NotAHomomorphism(h1, h2)


def semidirect_product(n, h, action, cap=None, label=''):
    """
    N x| H with (n1, h1)(n2, h2) = (n1 * phi_h1(n2), h1 h2).

    `action` maps each element index of H to an automorphism table of N
    (a sequence of length |N|); both the automorphisms and the
    homomorphism H -> Aut(N) are verified. The pair (x, y) has index
    y*|N| + x.
    """
    nn, nh = n.order, h.order
    limit = _check_cap(nn * nh, cap)
    try:
        phi = np.array([list(action[y]) for y in range(nh)], dtype=np.intp)
    except (KeyError, IndexError) as exc:
        raise NotAnAutomorphism(exc.args[0] if exc.args else '?', 'missing from action') from exc
    if phi.shape != (nh, nn) or (phi < 0).any() or (phi >= nn).any():
        raise NotAnAutomorphism('?', f'action tables must have shape ({nh}, {nn})')
    _check_action(n, h, phi)

    h1 = np.arange(nh)[:, None, None, None]
    n1 = np.arange(nn)[None, :, None, None]
    h2 = np.arange(nh)[None, None, :, None]
    n2 = np.arange(nn)[None, None, None, :]
    table = (n.mul[n1, phi[h1, n2]] + nn * h.mul[h1, h2]).reshape(nn * nh, nn * nh)
    return build_from_cayley(
        table, label=label or f'{n.label or "?"}:{h.label or "?"}', cap=limit)


def metacyclic(m, k, r, cap=None):
    """
    C_m x| C_k where the generator of C_k acts as x -> r*x.

    Requires gcd(r, m) = 1 and r^k = 1 mod m; a bad r surfaces as
    NotAnAutomorphism or NotAHomomorphism from semidirect_product.
    """
    if m < 1 or k < 1:
        raise InvalidParameter(f'metacyclic group needs m, k >= 1, got {m}, {k}')
    if gcd(r, m) != 1:
        raise NotAnAutomorphism(1, f'x -> {r}x is not invertible mod {m}')
    limit = _check_cap(m * k, cap)
    x = np.arange(m)
    action = {y: (pow(r, y, m) * x) % m for y in range(k)}
    return semidirect_product(cyclic(m, cap=limit), cyclic(k, cap=limit), action,
                              cap=limit, label=f'M({m},{k},{r})')


def heisenberg(p, cap=None):
    """
    The non-abelian group of order p^3 and exponent p (p odd):
    (C_p x C_p) x| C_p with the generator acting as (x, y) -> (x + y, y).
    """
    if p < 3 or p % 2 == 0:
        raise InvalidParameter(f'Heisenberg group needs an odd prime, got {p}')
    limit = _check_cap(p ** 3, cap)
    base = abelian([p, p], cap=limit)
    # base index of (x, y) is x*p + y
    x, y = np.divmod(np.arange(p * p), p)
    action = {t: ((x + t * y) % p) * p + y for t in range(p)}
    return semidirect_product(base, cyclic(p, cap=limit), action,
                              cap=limit, label=f'Heis{p}')
