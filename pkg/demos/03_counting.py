"""Exact counting of strings and Lyndon words by length, weight, period.

These counts drive the cut plan: how many windows exist below a weight,
and how the fixed-weight windows split by period.  Everything is exact
integer arithmetic, so lengths up to k^n never overflow.
"""

from cutdown import (
    count_lyndon,
    count_strings,
    count_weight_at_most,
    count_weight_period,
)

n, k = 6, 2
print(f"binary strings of length {n} by weight:")
print("  w :", *(f"{count_strings(n, w, k):3d}" for w in range(n + 1)))
print("  cumulative:",
      *(f"{count_weight_at_most(w, n, k):3d}" for w in range(n + 1)))

print(f"\nweight-4 strings of length 6 split by exact period:")
for p in range(1, 7):
    c = count_weight_period(4, p, 6, 2)
    if c:
        print(f"  period {p}: {c}")

print("\nLyndon words (aperiodic necklaces) of length 6 by weight:")
for w in range(7):
    print(f"  weight {w}: {count_lyndon(6, w, 2)}")

# counts stay exact at sizes where floats would round
big_n = 120
print(f"\nstrings of length {big_n} and weight {big_n // 2}:")
print(" ", count_strings(big_n, big_n // 2, 2))
