"""Exact irreducible characters of symmetric groups.

Values are computed with the border-strip recursion: peel one part of the
cycle type at a time, largest first, and sum over ways to remove a border
strip of that size from the shape, signed by strip height.  Everything is
plain integer arithmetic, so results are exact at any n.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .partitions import Partition, conjugate, enumerate_partitions


class BorderStrip(NamedTuple):
    """One way to remove a strip: the shape left behind and the strip's height
    (number of rows it touches)."""

    remaining: Partition
    height: int


def border_strips(shape: Partition, size: int) -> list[BorderStrip]:
    """All removals of a border strip with ``size`` cells from ``shape``.

    Uses the beta-number picture: the diagram corresponds to the set of
    first-column hook lengths shape[i] + len - 1 - i, and removing a strip
    of s cells means lowering one beta number by s without colliding with
    another.  The strip height is the number of beta values jumped over,
    plus one.  Results are ordered bottom row upward.
    """
    if size <= 0:
        raise ValueError(f"strip size must be positive, got {size}")
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beta)
    out = []
    for i in range(ell - 1, -1, -1):
        lowered = beta[i] - size
        if lowered < 0 or lowered in occupied:
            continue
        height = 1
        for j in range(i + 1, ell):
            if beta[j] > lowered:
                height += 1
            else:
                break
        moved = sorted(beta[:i] + beta[i + 1 :] + [lowered], reverse=True)
        remaining = tuple(
            b - (len(moved) - 1 - k) for k, b in enumerate(moved) if b > len(moved) - 1 - k
        )
        out.append(BorderStrip(remaining, height))
    return out


def _eval(shape: Partition, peel: tuple[int, ...], memo: dict, mod: int | None) -> int:
    """Character value at ``shape`` for the remaining peel sequence.

    Shapes at different peel depths have different sizes, so the shape alone
    is a sound memo key for a fixed sequence.
    """
    if not peel:
        return 1
    cached = memo.get(shape)
    if cached is not None:
        return cached
    total = 0
    for remaining, height in border_strips(shape, peel[0]):
        value = _eval(remaining, peel[1:], memo, mod)
        total += value if height % 2 else -value
    if mod is not None:
        total %= mod
    memo[shape] = total
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Exact character value chi_lam(mu); both must partition the same n."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    peel = tuple(sorted(mu, reverse=True))
    return _eval(lam, peel, {}, None)


def mn_character_mod(lam: Partition, mu: Partition, m: int) -> int:
    """chi_lam(mu) reduced mod ``m``, with all arithmetic done mod m."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    peel = tuple(sorted(mu, reverse=True))
    return _eval(lam, peel, {}, m)


def character_degree(lam: Partition) -> int:
    """Dimension of the irreducible labeled by ``lam``: n! over the product
    of hook lengths."""
    n = sum(lam)
    cols = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return math.factorial(n) // hooks


def _column_values(mu: Partition, mod: int | None) -> dict[Partition, int]:
    """Character values at class ``mu`` for every shape, by one shared sweep.

    Works bottom up through the peel sequence: after peeling the last j
    parts, every partition of the leftover size is reachable, so each level
    is filled in full and reused by the level above.
    """
    peel = sorted(mu, reverse=True)
    suffix = [0] * (len(peel) + 1)
    for j in range(len(peel) - 1, -1, -1):
        suffix[j] = suffix[j + 1] + peel[j]
    values: dict[Partition, int] = {(): 1}
    for j in range(len(peel) - 1, -1, -1):
        size = peel[j]
        level: dict[Partition, int] = {}
        for shape in enumerate_partitions(suffix[j]):
            total = 0
            for remaining, height in border_strips(shape, size):
                value = values.get(remaining)
                if value is not None:
                    total += value if height % 2 else -value
            if mod is not None:
                total %= mod
            level[shape] = total
        values = level
    return values


def table_column(mu: Partition) -> list[int]:
    """chi_lam(mu) for every lam of the same n, in enumerate_partitions order."""
    values = _column_values(mu, None)
    return [values[lam] for lam in enumerate_partitions(sum(mu))]


def table_column_mod(mu: Partition, m: int) -> list[int]:
    """Like :func:`table_column` but with every value reduced mod ``m``."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    values = _column_values(mu, m)
    return [values[lam] for lam in enumerate_partitions(sum(mu))]
