"""How the cut plan reacts to the target length.

The generator joins register cycles by increasing weight, then increasing
period, until the joined universal cycle is at least as long as the target
L.  The overhang s is removed by redirecting the successor at one or two
marker windows, each deleting a small cycle (one symbol for the all-zero
cycle, i symbols for the cycle of 0^(i-1) 1).
"""

from cutdown import cut_set, derive_params

n, k = 6, 2
print(f"n={n}, k={k}: valid lengths are {k**(n-1)+1} .. {k**n}\n")
print("  L   m  h  t  s  markers (cut cycle sizes)")
for L in (33, 40, 46, 50, 52, 57, 60, 63, 64):
    p = derive_params(n, k, L)
    cs = cut_set(p.s, n)
    markers = ", ".join("".join(map(str, m)) for m in cs.markers) or "-"
    sizes = list(cs.sizes)
    print(f" {L:3d}   {p.m}  {p.h}  {p.t}  {p.s}  {markers} {sizes if sizes else ''}")

print("""
Reading one row: for L=46 the maximum window weight is m=4, weight-4
cycles are joined up to period h=6, and t=1 such cycle is included; the
joined cycle overshoots by s=5, so the cycles behind markers 001001
(3 windows) and 010101 (2 windows) are cut away.""")

out_of_range = 20
try:
    derive_params(n, k, out_of_range)
except ValueError as exc:
    print(f"L={out_of_range} is rejected: {exc}")
