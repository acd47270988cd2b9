"""The chi-binding functions f_p(omega) for {pK2, H}-free graphs.

Each family's function is a recursion on ``p`` with explicit rows for
``p = 2`` and for small ``omega``.  ``diamond`` shares the gem function and
``dart`` the gem-plus function.  The house (complement of P5) function has a
fractional ``p = 2`` row ``3s/2``; it is evaluated exactly and floored, which
is the same bound for an integer chromatic number.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, floor


class UndefinedBound(ValueError):
    pass


def _omega2_row(p: int) -> int:
    return 2 * p - 2


def _omega3(p: int) -> int:
    return 2 * p * p - 3 * p + 4


@lru_cache(maxsize=None)
def _gem(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return 3 if m == 2 else m
    if m == 2:
        return _omega2_row(p)
    return _gem(p - 1, m) + 2 * m - 2


@lru_cache(maxsize=None)
def _k2p4(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4}.get(m, m + 2)
    if m == 2:
        return _omega2_row(p)
    if m == 3:
        return _omega3(p)
    return _k2p4(p - 1, m) + 2 * _gem(p - 1, m - 1) + 3 * m - 6


@lru_cache(maxsize=None)
def _hvn(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4}.get(m, m)
    if m == 2:
        return _omega2_row(p)
    if m == 3:
        return _omega3(p)
    return _hvn(p - 1, m) + 2 * _hvn(p - 1, m - 1)


@lru_cache(maxsize=None)
def _k5e(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4, 4: 6}.get(m, m)
    if m == 2:
        return _omega2_row(p)
    if m == 3:
        return _omega3(p)
    return _k5e(p - 1, m) + 2 * _gem(p - 1, m - 1) + 3 * m - 6


@lru_cache(maxsize=None)
def _butterfly(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4}.get(m, comb(m + 1, 2))
    if m == 2:
        return _omega2_row(p)
    return _butterfly(p - 1, m) + comb(m + 1, 2) - 1


@lru_cache(maxsize=None)
def _gemplus(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4}.get(m, comb(m + 1, 2))
    if m == 2:
        return _omega2_row(p)
    return _gemplus(p - 1, m) + comb(m + 1, 2) + m - 2


@lru_cache(maxsize=None)
def _k1c4(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return m + 1
    if m == 2:
        return _omega2_row(p)
    return sum(_k1c4(p - 1, j) for j in range(2, m + 1)) + _k1c4(p - 1, m - 1) + 1


@lru_cache(maxsize=None)
def _c4(p: int, m: int) -> int:
    if m == 1:
        return 1
    if p == 2:
        return m + 1
    if m == 2:
        return _omega2_row(p)
    return sum(_c4(p - 1, j) for j in range(2, m + 1)) + 1


@lru_cache(maxsize=None)
def _house(p: int, m: int) -> Fraction:
    if m == 1:
        return Fraction(1)
    if p == 2:
        return Fraction(3 * m, 2)
    if m == 2:
        return Fraction(_omega2_row(p))
    return m + sum(_house(p - 1, j) for j in range(2, m + 1))


def _plain(p: int, m: int) -> int:
    # pK2-free with no companion: only the rows that are known.
    if m == 1:
        return 1
    if p == 2:
        return {2: 3, 3: 4}.get(m, comb(m + 1, 2))
    if m == 2:
        return _omega2_row(p)
    if m == 3:
        return _omega3(p)
    raise UndefinedBound(f"no bound for pK2-free graphs with p={p}, omega={m}")


_TABLE = {
    "gem": _gem,
    "diamond": _gem,
    "k2p4": _k2p4,
    "hvn": _hvn,
    "k5e": _k5e,
    "butterfly": _butterfly,
    "gemplus": _gemplus,
    "dart": _gemplus,
    "k1c4": _k1c4,
    "c4": _c4,
    "house": _house,
    "none": _plain,
}


def binding_bound(family: str, p: int, omega: int) -> int:
    """Upper bound on the chromatic number of a {pK2, family}-free graph with
    clique number ``omega``.  ``omega = 0`` (the empty graph) gives 0."""
    try:
        f = _TABLE[family]
    except KeyError:
        raise UndefinedBound(f"unknown family {family!r}") from None
    if p < 2:
        raise UndefinedBound(f"p must be at least 2, got {p}")
    if omega < 0:
        raise UndefinedBound(f"omega must be non-negative, got {omega}")
    if omega == 0:
        return 0
    return int(floor(f(p, omega)))


def base_budget(p: int, omega: int) -> int:
    """Budget for a pK2-free graph with omega <= 3 (the binomial
    2K2 bound, the triangle-free row, the 2K2-free omega-3 row and the
    omega-3 recursion)."""
    return _plain(p, omega) if omega else 0
