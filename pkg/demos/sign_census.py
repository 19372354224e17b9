"""Sign statistics: are positive values really more common than negative?

Among nonzero entries the positive ones hold a shrinking majority that
drifts toward an even split.  Run with: python3 demos/sign_census.py
"""

from chartab import sign_probabilities, sign_stats, sign_trend

# Exact sign tallies over the full table.  Zero entries are counted apart,
# since the interesting ratio conditions on being nonzero.
print(" n     pos     neg    zero")
for n in range(1, 15):
    tally = sign_stats(n)
    print(f"{n:2}  {tally.positive:6}  {tally.negative:6}  {tally.zero:6}")

# Conditional shares, rounded half-to-even at 6 decimals.
pos, neg = sign_probabilities(14)
print(f"\nn=14: positive share {pos}, negative share {neg}")

# The trend emits both series together, ready for plotting.
print("\n n   positive   negative")
for point_pos, point_neg in sign_trend(14):
    print(f"{point_pos.n:2}   {point_pos.observed:.6f}   {point_neg.observed:.6f}")
