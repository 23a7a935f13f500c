"""Derive cut-down parameters (m, h, t, s) and the marker words that cut
small cycles out of the main cycle.

Given an order n, alphabet size k and a target length L with
k^(n-1) < L <= k^n, the main cycle joins

  * every pure-cycling-register cycle of weight < m,
  * every cycle of weight m and period < h, and
  * exactly t cycles of weight m and period h,

where m, h, t are minimal so the joined length A(m-1) + C(m, h-1) + t*h
reaches L (A = words of weight <= ., C = weight-m words of period <= .).
The surplus s is the overhang of that length over L; it is removed by
redirecting the successor at up to two marker words, each marker cutting
the small cycle [0..01] of a chosen length out of the main cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import count_weight_at_most, count_weight_period_at_most
from .words import Word


@dataclass(frozen=True)
class CutParams:
    """Parameters driving one cut-down construction."""

    n: int
    k: int
    L: int
    m: int  # maximum window weight on the main cycle
    h: int  # period threshold for weight-m cycles
    t: int  # number of weight-m, period-h cycles joined
    s: int  # surplus length removed by cutting small cycles


@dataclass(frozen=True)
class CutSet:
    """Marker words at which the successor is redirected, with the length of
    the small cycle each marker excises.  0, 1 or 2 markers; sizes sum to s."""

    markers: tuple[Word, ...]
    sizes: tuple[int, ...]

    def total(self) -> int:
        return sum(self.sizes)


def derive_params(n: int, k: int, L: int) -> CutParams:
    """Compute the unique (m, h, t, s) for a length-L cut-down sequence.

    Raises ValueError when L is outside the supported interval
    (k^(n-1), k^n]; shorter targets should reduce the order n instead.
    """
    if n < 2 or k < 2:
        raise ValueError("need n >= 2 and k >= 2")
    lo, hi = k ** (n - 1), k ** n
    if not lo < L <= hi:
        raise ValueError(
            f"L={L} out of range: need k^(n-1) < L <= k^n, "
            f"i.e. {lo} < L <= {hi} for n={n}, k={k}")

    m = 0
    while count_weight_at_most(m, n, k) < L:
        m += 1
    below = count_weight_at_most(m - 1, n, k)

    h = 1
    while below + count_weight_period_at_most(m, h, n, k) < L:
        h += 1

    base = below + count_weight_period_at_most(m, h - 1, n, k)
    # smallest t >= 1 with base + t*h >= L; base < L by minimality of h
    t = -((base - L) // h)

    s = base + t * h - L
    assert 0 <= s < h <= n
    return CutParams(n=n, k=k, L=L, m=m, h=h, t=t, s=s)


def marker_word(i: int, n: int) -> Word:
    """First window visited on the small cycle [0^(i-1) 1], as a length-n word.

    For i == 1 this is the all-zero word.  When i divides n the window is the
    repeated pattern itself; otherwise the window starts at the phase with
    (n mod i) - 1 leading zeros, which is the first one reached by the main
    cycle.  Only i == 1 or i <= ceil(n/2) are cuttable; larger cycles act as
    bridges between register cycles and cannot be removed this way.
    """
    if i == 1:
        return (0,) * n
    if not 2 <= i <= (n + 1) // 2:
        raise ValueError(f"cycle length {i} not cuttable for n={n}: "
                         f"need i == 1 or i <= ceil(n/2)")
    pattern = (0,) * (i - 1) + (1,)
    x, r = divmod(n, i)
    if r == 0:
        return pattern * x
    return (0,) * (r - 1) + (1,) + pattern * x


def cut_set(surplus: int, n: int) -> CutSet:
    """Markers cutting cycles whose lengths sum to ``surplus``.

    One marker suffices for surplus <= ceil(n/2); otherwise the surplus is
    split as ceil(n/2) + remainder across two disjoint cycles.
    """
    if not 0 <= surplus < n:
        raise ValueError(f"surplus {surplus} out of range [0, {n})")
    if surplus == 0:
        return CutSet(markers=(), sizes=())
    j = (n + 1) // 2
    if surplus <= j:
        return CutSet(markers=(marker_word(surplus, n),), sizes=(surplus,))
    return CutSet(markers=(marker_word(j, n), marker_word(surplus - j, n)),
                  sizes=(j, surplus - j))
