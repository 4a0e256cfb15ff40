# groups/config.py
from django.conf import settings

from .exceptions import InvalidParameter

DEFAULT_ORDER_CAP = 200


def order_cap(cap=None):
    """Explicit cap wins, then ISOLATTA['ORDER_CAP'] (env ISOLATTA_CAP)"""
    if cap is not None:
        return int(cap)
    raw = getattr(settings, 'ISOLATTA', {}).get('ORDER_CAP', DEFAULT_ORDER_CAP)
    try:
        value = int(raw)
    except (TypeError, ValueError):
        value = 0
    if value < 1:
        raise InvalidParameter(f'ISOLATTA_CAP must be a positive integer, got {raw!r}')
    return value


def isolatta_setting(name, default=None):
    return getattr(settings, 'ISOLATTA', {}).get(name, default)
