"""Generate a cut-down sequence of an awkward length and check it.

A classic use: a cyclic sequence for a 52-card deck where every run of 6
consecutive cards pins down the position.  52 is not a power of two, so no
plain de Bruijn sequence fits; a cut-down sequence of length exactly 52
does.
"""

from cutdown import SequenceSpec, generate, verify

seq = list(generate(SequenceSpec(n=6, k=2, L=52)))
text = "".join(map(str, seq))
print(f"cyclic sequence of length {len(seq)}:")
print(f"  {text}")

report = verify(seq, n=6, k=2, expected_len=52)
print(f"every 6-window unique (wraparound included): {report.ok}")

doubled = seq + seq[:5]
windows = sorted("".join(map(str, doubled[i:i + 6])) for i in range(52))
print(f"first five windows in sorted order: {windows[:5]}")
print(f"number of distinct windows: {len(set(windows))} of 64 possible")

# any length in (2^5, 2^6] works the same way
for L in (33, 40, 64):
    body = list(generate(SequenceSpec(n=6, k=2, L=L)))
    print(f"L={L:3d}: ok={verify(body, 6, 2, expected_len=L).ok}")
