"""Streaming statistics over full character tables.

Each statistic is a tally over all p(n)^2 table entries, accumulated column
by column so no table is ever materialized.  Tallies form a commutative
monoid under merge, which is what makes the worker splits below safe: any
partition of the columns over any number of processes merges to the same
result.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import table_column, table_column_mod
from .partitions import enumerate_partitions, partition_count

PARITY_BUDGET = 26
SIGN_BUDGET = 20


class BudgetError(ValueError):
    """Raised when a sweep is refused because n exceeds the active budget."""


@dataclass(frozen=True)
class ResidueTally:
    """Counts of table entries by residue class mod ``modulus``."""

    modulus: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)

    @classmethod
    def zero(cls, modulus: int) -> "ResidueTally":
        return cls(modulus, (0,) * modulus)


@dataclass(frozen=True)
class SignTally:
    """Counts of strictly positive, strictly negative, and zero entries."""

    positive: int = 0
    negative: int = 0
    zero: int = 0

    def total(self) -> int:
        return self.positive + self.negative + self.zero


def merge_tallies(a, b):
    """Componentwise sum of two tallies of the same kind."""
    if type(a) is not type(b):
        raise ValueError(f"cannot merge {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, ResidueTally):
        if a.modulus != b.modulus:
            raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
        return ResidueTally(a.modulus, tuple(x + y for x, y in zip(a.counts, b.counts)))
    if isinstance(a, SignTally):
        return SignTally(a.positive + b.positive, a.negative + b.negative, a.zero + b.zero)
    raise ValueError(f"not a tally: {type(a).__name__}")


def _check_budget(n: int, budget: int | None, default: int, kind: str) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    limit = default if budget is None else budget
    if n > limit:
        raise BudgetError(f"{kind} sweep for n={n} exceeds the budget of {limit}")


def _tally_chunk(args):
    """Tally one chunk of columns; top level so worker processes can import it."""
    kind, modulus, columns = args
    if kind == "residue":
        counts = [0] * modulus
        for mu in columns:
            for value in table_column_mod(mu, modulus):
                counts[value] += 1
        return ResidueTally(modulus, tuple(counts))
    positive = negative = zero = 0
    for mu in columns:
        for value in table_column(mu):
            if value > 0:
                positive += 1
            elif value < 0:
                negative += 1
            else:
                zero += 1
    return SignTally(positive, negative, zero)


def _sweep(n: int, kind: str, modulus: int, workers: int | None):
    columns = list(enumerate_partitions(n))
    if workers is None:
        workers = os.cpu_count() or 1
    empty = ResidueTally.zero(modulus) if kind == "residue" else SignTally()
    if workers <= 1 or len(columns) < 2 * workers:
        return merge_tallies(empty, _tally_chunk((kind, modulus, columns)))
    stride = min(4 * workers, len(columns))
    chunks = [columns[i::stride] for i in range(stride)]
    total = empty
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_tally_chunk, [(kind, modulus, c) for c in chunks]):
            total = merge_tallies(total, part)
    return total


def residue_tally(n: int, d: int, *, budget: int | None = None, workers: int | None = None) -> ResidueTally:
    """Tally all table entries of S_n by residue mod ``d``."""
    if d < 2:
        raise ValueError(f"modulus must be at least 2, got {d}")
    _check_budget(n, budget, PARITY_BUDGET, "residue")
    return _sweep(n, "residue", d, workers)


def parity_stats(n: int, *, budget: int | None = None, workers: int | None = None) -> tuple[int, int]:
    """(even, odd) counts over all p(n)^2 character values of S_n."""
    _check_budget(n, budget, PARITY_BUDGET, "parity")
    tally = _sweep(n, "residue", 2, workers)
    return tally.counts[0], tally.counts[1]


def count_residue_zero(n: int, d: int, *, budget: int | None = None, workers: int | None = None) -> int:
    """Number of table entries of S_n divisible by ``d``."""
    return residue_tally(n, d, budget=budget, workers=workers).counts[0]


def sign_stats(n: int, *, budget: int | None = None, workers: int | None = None) -> SignTally:
    """Sign tally over all character values of S_n, from exact columns."""
    _check_budget(n, budget, SIGN_BUDGET, "sign")
    return _sweep(n, "signs", 0, workers)


def round6(value: Fraction) -> float:
    """Round an exact ratio half-to-even to 6 decimal places."""
    scaled = round(Fraction(value) * 10**6)
    return float(Fraction(scaled, 10**6))


def format6(value: Fraction) -> str:
    """Fixed 6-decimal string of an exact ratio, rounded half-to-even."""
    scaled = round(Fraction(value) * 10**6)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 10**6}.{scaled % 10**6:06d}"


def proportion_even(n: int, *, budget: int | None = None, workers: int | None = None) -> float:
    """E_n / p(n)^2 rounded to 6 decimals; the ratio itself stays exact."""
    even, odd = parity_stats(n, budget=budget, workers=workers)
    return round6(Fraction(even, even + odd))


def sign_probabilities(n: int, *, budget: int | None = None, workers: int | None = None) -> tuple[float, float]:
    """(positive, negative) shares among the nonzero entries, 6-decimal rounded."""
    tally = sign_stats(n, budget=budget, workers=workers)
    nonzero = tally.positive + tally.negative
    if nonzero == 0:
        raise ValueError(f"no nonzero entries for n={n}")
    return (
        round6(Fraction(tally.positive, nonzero)),
        round6(Fraction(tally.negative, nonzero)),
    )


@dataclass
class TableStats:
    """Bundle of per-n statistics, as much of it as was requested."""

    n: int
    partitions: int
    entries: int
    even: int | None = None
    odd: int | None = None
    signs: SignTally | None = None
    residues: dict[int, ResidueTally] = field(default_factory=dict)
    elapsed: float = 0.0

    def check(self) -> None:
        """Raise if the tallies disagree with each other or with p(n)^2."""
        if self.even is not None and self.even + self.odd != self.entries:
            raise ValueError("parity counts do not cover the table")
        if self.signs is not None and self.signs.total() != self.entries:
            raise ValueError("sign counts do not cover the table")
        for d, tally in self.residues.items():
            if tally.total() != self.entries:
                raise ValueError(f"mod-{d} counts do not cover the table")
        if self.even is not None and 2 in self.residues:
            if self.residues[2].counts[0] != self.even:
                raise ValueError("mod-2 tally disagrees with parity counts")
        if self.signs is not None and self.even is not None:
            if self.signs.zero > self.even:
                raise ValueError("zero entries exceed even entries")

    def to_dict(self) -> dict:
        out: dict = {"n": self.n, "p_n": self.partitions, "entries": self.entries}
        if self.even is not None:
            out["parity"] = {
                "even": self.even,
                "odd": self.odd,
                "proportion_even": format6(Fraction(self.even, self.entries)),
            }
        if self.signs is not None:
            nonzero = self.signs.positive + self.signs.negative
            out["signs"] = {
                "positive": self.signs.positive,
                "negative": self.signs.negative,
                "zero": self.signs.zero,
            }
            if nonzero:
                out["signs"]["proportion_positive"] = format6(
                    Fraction(self.signs.positive, nonzero)
                )
                out["signs"]["proportion_negative"] = format6(
                    Fraction(self.signs.negative, nonzero)
                )
        if self.residues:
            out["residues"] = {
                str(d): {"modulus": t.modulus, "counts": list(t.counts)}
                for d, t in sorted(self.residues.items())
            }
        out["elapsed_seconds"] = self.elapsed
        return out


def collect_stats(
    n: int,
    kinds: tuple[str, ...] = ("parity",),
    moduli: tuple[int, ...] = (),
    *,
    budget: int | None = None,
    workers: int | None = None,
) -> TableStats:
    """Run the requested sweeps for one n and bundle the results."""
    p = partition_count(n)
    stats = TableStats(n=n, partitions=p, entries=p * p)
    start = time.perf_counter()
    for kind in kinds:
        if kind == "parity":
            stats.even, stats.odd = parity_stats(n, budget=budget, workers=workers)
        elif kind == "signs":
            stats.signs = sign_stats(n, budget=budget, workers=workers)
        elif kind == "residue":
            for d in moduli:
                stats.residues[d] = residue_tally(n, d, budget=budget, workers=workers)
        else:
            raise ValueError(f"unknown statistic kind: {kind}")
    stats.elapsed = time.perf_counter() - start
    stats.check()
    return stats
