"""Integer partitions and conjugacy-class arithmetic for symmetric groups.

A partition is a tuple of weakly decreasing positive ints, e.g. (4, 2, 1).
The empty tuple () is the unique partition of 0.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterator

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive ints."""
    if not isinstance(parts, tuple):
        return False
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def enumerate_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of ``n`` in reverse lexicographic order.

    (n) comes first and (1, ..., 1) last.  ``largest`` caps the first part,
    which is what the recursion itself needs.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


_PARTITION_COUNTS = [1]


def partition_count(n: int) -> int:
    """Number of partitions of ``n``, by Euler's pentagonal recurrence."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    counts = _PARTITION_COUNTS
    while len(counts) <= n:
        m = len(counts)
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[m - g]
            g = k * (3 * k + 1) // 2
            if g <= m:
                total += sign * counts[m - g]
            k += 1
        counts.append(total)
    return counts[n]


def conjugate(parts: Partition) -> Partition:
    """Transpose the Young diagram: column lengths become row lengths."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def is_self_conjugate(parts: Partition) -> bool:
    return parts == conjugate(parts)


def self_conjugate_to_odd_distinct(parts: Partition) -> Partition:
    """Unfold a self-conjugate partition into its diagonal hooks.

    The i-th principal hook has 2*(parts[i] - i) - 1 cells (1-based i); the
    hook lengths are distinct odd numbers and sum to the same n.  Raises
    ValueError if ``parts`` is not self-conjugate.
    """
    if not is_self_conjugate(parts):
        raise ValueError(f"{parts} is not self-conjugate")
    hooks = []
    for i, p in enumerate(parts):
        if p <= i:
            break
        hooks.append(2 * (p - i) - 1)
    return tuple(hooks)


def odd_distinct_to_self_conjugate(parts: Partition) -> Partition:
    """Fold distinct odd parts back into nested hooks of a self-conjugate shape.

    Inverse of :func:`self_conjugate_to_odd_distinct`.  Raises ValueError
    unless ``parts`` is strictly decreasing with every part odd.
    """
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    if any(p % 2 == 0 for p in parts):
        raise ValueError(f"{parts} has an even part")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} has a repeated part")
    arms = [(p - 1) // 2 for p in parts]
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = rows[0] if rows else 0
    for i in range(d, depth):
        rows.append(sum(1 for r in rows[:d] if r >= i + 1))
    return tuple(rows)


def count_self_conjugate(n: int) -> int:
    """Number of self-conjugate partitions of ``n``.

    Counted through the hook bijection as partitions into distinct odd
    parts, with a 0/1 knapsack over the odd numbers up to n.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


def cycle_type_multiplicities(parts: Partition) -> dict[int, int]:
    """Map each part size to its multiplicity, e.g. (3, 1, 1) -> {3: 1, 1: 2}."""
    return dict(Counter(parts))


def partition_from_multiplicities(mults: dict[int, int]) -> Partition:
    """Rebuild the partition from a part -> multiplicity map."""
    parts = []
    for p in sorted(mults, reverse=True):
        m = mults[p]
        if p <= 0 or m <= 0:
            raise ValueError(f"invalid entry {p}: {m}")
        parts.extend([p] * m)
    return tuple(parts)


def centralizer_order(parts: Partition) -> int:
    """Order of the centralizer of a permutation with this cycle type.

    z_mu = prod over part sizes p of p**m_p * m_p! where m_p is the
    multiplicity of p.
    """
    z = 1
    for p, m in Counter(parts).items():
        z *= p**m * math.factorial(m)
    return z


def class_size(parts: Partition) -> int:
    """Size of the conjugacy class with cycle type ``parts`` in S_n."""
    return math.factorial(sum(parts)) // centralizer_order(parts)
