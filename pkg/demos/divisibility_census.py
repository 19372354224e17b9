"""Divisibility beyond parity: entries divisible by d for several d at once.

Run with: python3 demos/divisibility_census.py
"""

from chartab import (
    count_residue_zero,
    general_divisibility_trend,
    merge_tallies,
    residue_tally,
)

# Full residue histogram mod 5 for one n: counts of entries in each class.
tally = residue_tally(10, 5)
print("residues mod 5 at n=10:", dict(enumerate(tally.counts)))
print("divisible by 5:", count_residue_zero(10, 5))

# Tallies merge componentwise, which is what makes the parallel column
# sweeps safe: any split of the columns reduces to the same totals.
half_a = residue_tally(9, 3)
half_b = residue_tally(9, 3)
merged = merge_tallies(half_a, half_b)
print("merging two mod-3 tallies doubles every count:", merged.counts)

# The census grid for d = 3..7, one row per n.
table = general_divisibility_trend(14, {3, 4, 5, 6, 7})
print("\n n    d=3    d=4    d=5    d=6    d=7")
for n in sorted(table):
    row = "  ".join(f"{table[n][d]:5}" for d in (3, 4, 5, 6, 7))
    print(f"{n:2}  {row}")
