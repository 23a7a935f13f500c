"""Lexicographic ranking of fixed-weight Lyndon words, plus the brute-force
enumeration oracle used to validate it.

Ranks are 1-based positions in the lexicographic listing of all Lyndon words
of the given length and weight.  ``rank_lyndon`` builds that listing once per
(length, weight, alphabet) via a pruned prefix-tree walk (the classic
necklace-generation recursion restricted by achievable weight), caches it,
and binary-searches; no cubic ranking machinery is used, which is plenty at
the sizes where the successor rule needs ranks.  ``enumerate_lyndon`` is the
independent oracle: filter every k-ary word, so it refuses to run above a
candidate-count limit.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from itertools import product

from .words import Word, is_necklace, least_rotation, period, weight

ORACLE_LIMIT = 10 ** 7


def enumerate_lyndon(n: int, w: int, k: int, limit: int = ORACLE_LIMIT) -> list[Word]:
    """All Lyndon words of length n and weight w in increasing lexicographic
    order, found by filtering all k^n candidate words.

    Refuses (ValueError) when k^n exceeds ``limit``; this is an oracle for
    validation, not a production enumerator.
    """
    if k ** n > limit:
        raise ValueError(f"k^n = {k ** n} exceeds the oracle limit {limit}")
    out = []
    for cand in product(range(k), repeat=n):
        if sum(cand) == w and is_necklace(cand) == n:
            out.append(cand)
    return out


@lru_cache(maxsize=None)
def _lyndon_listing(n: int, w: int, k: int) -> tuple[Word, ...]:
    # Lex-ordered fixed-weight Lyndon words by the standard necklace-prefix
    # recursion, pruning branches that cannot reach weight w.
    out: list[Word] = []
    a = [0] * (n + 1)

    def gen(t: int, p: int, wt: int) -> None:
        if wt > w or wt + (n - t + 1) * (k - 1) < w:
            return
        if t > n:
            if p == n and wt == w:
                out.append(tuple(a[1:]))
            return
        c = a[t - p]
        a[t] = c
        gen(t + 1, p, wt + c)
        for d in range(c + 1, k):
            a[t] = d
            gen(t + 1, t, wt + d)

    gen(1, 1, 0)
    return tuple(out)


def rank_lyndon(word: Word, k: int = 2) -> int:
    """1-based rank of the Lyndon rotation of ``word`` among all Lyndon words
    of the same length and weight, in lexicographic order.

    The input must be aperiodic (periodic words have no Lyndon rotation);
    rotations of the same word therefore all share one rank.
    """
    word = tuple(word)
    n = len(word)
    if period(word) != n:
        raise ValueError(f"{word} is periodic; it has no Lyndon rotation")
    sigma = least_rotation(word)
    listing = _lyndon_listing(n, weight(word), k)
    i = bisect_left(listing, sigma)
    assert i < len(listing) and listing[i] == sigma
    return i + 1
