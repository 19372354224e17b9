"""A tour of the partition layer: enumeration, conjugation, and counting.

Run with: python3 demos/partitions_tour.py
"""

from chartab import (
    centralizer_order,
    class_size,
    conjugate,
    count_self_conjugate,
    enumerate_partitions,
    is_self_conjugate,
    odd_distinct_to_self_conjugate,
    partition_count,
    self_conjugate_to_odd_distinct,
)

# Partitions come out in reverse lexicographic order: the trivial shape (n)
# first, the column (1, ..., 1) last.  That order is what the character
# table rows and columns use everywhere else.
print("partitions of 5:")
for lam in enumerate_partitions(5):
    print("  ", lam)

# Conjugation transposes the Young diagram.  It is an involution, and its
# fixed points are the self-conjugate shapes.
print("\nconjugates:")
for lam in enumerate_partitions(5):
    mark = "  <- self-conjugate" if is_self_conjugate(lam) else ""
    print(f"   {lam} -> {conjugate(lam)}{mark}")

# Self-conjugate shapes unfold along their diagonal into hooks of odd,
# pairwise distinct sizes; the map is a bijection.
lam = (4, 3, 2, 1)
hooks = self_conjugate_to_odd_distinct(lam)
print(f"\n{lam} unfolds into diagonal hooks {hooks}")
print(f"{hooks} folds back into {odd_distinct_to_self_conjugate(hooks)}")

# partition_count uses the pentagonal-number recurrence, so large counts are
# cheap even though enumerating would be hopeless.
print("\npartition counts:")
for n in (10, 20, 50, 100):
    print(f"   p({n}) = {partition_count(n)}")
print(f"   self-conjugate partitions of 50: {count_self_conjugate(50)}")

# Cycle types index conjugacy classes; class sizes follow from centralizer
# orders and always sum to n!.
print("\nclasses of S_4:")
for mu in enumerate_partitions(4):
    print(f"   {mu}: centralizer {centralizer_order(mu)}, class size {class_size(mu)}")
