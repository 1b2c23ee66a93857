"""Size budgets, enforced explicitly and overridable through the environment.

Three independent caps:

* atom width (``CONTACTLAB_ATOM_LIMIT``, default 16) bounds plain algebra
  operations on bitmask elements;
* enumeration width (``CONTACTLAB_ENUM_LIMIT``, default 6) bounds anything
  that quantifies over the full 2**n carrier or materialises families;
* point budget (``CONTACTLAB_POINT_LIMIT``, default 12) bounds operations
  that enumerate all closed or open sets of a finite space.
"""

import os

from .errors import CapacityError

ATOM_LIMIT_ENV = "CONTACTLAB_ATOM_LIMIT"
ENUM_LIMIT_ENV = "CONTACTLAB_ENUM_LIMIT"
POINT_LIMIT_ENV = "CONTACTLAB_POINT_LIMIT"

DEFAULT_ATOM_LIMIT = 16
DEFAULT_ENUM_LIMIT = 6
DEFAULT_POINT_LIMIT = 12


def _read_limit(env_name, default):
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def atom_limit():
    return _read_limit(ATOM_LIMIT_ENV, DEFAULT_ATOM_LIMIT)


def enum_limit():
    return _read_limit(ENUM_LIMIT_ENV, DEFAULT_ENUM_LIMIT)


def point_limit():
    return _read_limit(POINT_LIMIT_ENV, DEFAULT_POINT_LIMIT)


def require_atom_width(n):
    limit = atom_limit()
    if n > limit:
        raise CapacityError(f"{n} atoms exceeds the algebra width limit {limit}")


def require_enum_width(n):
    limit = enum_limit()
    if n > limit:
        raise CapacityError(f"{n} atoms exceeds the enumeration width limit {limit}")


def require_point_budget(n):
    limit = point_limit()
    if n > limit:
        raise CapacityError(f"{n} points exceeds the point budget {limit}")
