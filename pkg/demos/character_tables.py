"""Exact character values, full tables, and the classical cross-checks.

Run with: python3 demos/character_tables.py
"""

import math

from chartab import (
    border_strips,
    centralizer_order,
    character_degree,
    enumerate_partitions,
    mn_character,
    table_column,
)

# A single character value: the recursion peels border strips off the shape,
# one part of the cycle type at a time.
print("chi_(2,2) at class (2,2):", mn_character((2, 2), (2, 2)))
print("strips of size 2 removable from (2,2):")
for strip in border_strips((2, 2), 2):
    print("   leaves", strip.remaining, "height", strip.height)

# Whole columns share one memo sweep, which is how the statistics layer
# walks entire tables.
n = 5
rows = list(enumerate_partitions(n))
print(f"\ncharacter table of S_{n} (rows = shapes, columns = classes):")
classes = list(reversed(rows))
columns = {mu: table_column(mu) for mu in classes}
for i, lam in enumerate(rows):
    values = "  ".join(f"{columns[mu][i]:>3}" for mu in classes)
    print(f"   {'+'.join(map(str, lam)):<10} {values}")

# The first column holds the degrees, which the hook length formula gives
# independently; their squares add up to the group order.
degrees = [character_degree(lam) for lam in rows]
print("\ndegrees:", degrees)
print("sum of squared degrees:", sum(d * d for d in degrees), "= 5! =", math.factorial(5))

# Column orthogonality: the squared column sums to the centralizer order.
for mu in ((5,), (2, 2, 1), (1, 1, 1, 1, 1)):
    column = table_column(mu)
    print(
        f"sum of squares at class {mu}: {sum(v * v for v in column)}"
        f" = centralizer order {centralizer_order(mu)}"
    )
