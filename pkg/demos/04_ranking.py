"""Ranking fixed-weight Lyndon words, and why the generator cares.

The context-free successor pins the joined weight-m period-h cycles to the
lexicographically largest Lyndon words of that weight.  Membership is a
rank comparison, so no joined-cycle counter has to be carried around.
"""

from cutdown import enumerate_lyndon, rank_lyndon, rotate

listing = enumerate_lyndon(8, 3, 2)
print("Lyndon words of length 8, weight 3, in lexicographic order:")
for i, word in enumerate(listing, start=1):
    print(f"  rank {i}: {''.join(map(str, word))}")

word = (1, 0, 0, 1, 0, 1, 0, 0)
print(f"\nrank of {''.join(map(str, word))} "
      f"(via its smallest rotation): {rank_lyndon(word)}")

print("\nranks are rotation-invariant:")
for j in (1, 3, 5):
    r = rotate(word, j)
    print(f"  {''.join(map(str, r))} -> {rank_lyndon(r)}")

t = 2
total = len(listing)
largest = [w for w in listing if total - rank_lyndon(w) + 1 <= t]
print(f"\nthe {t} lexicographically largest entries "
      f"(the ones a length target needing t={t} joined cycles keeps):")
for w in largest:
    print(f"  {''.join(map(str, w))}")
