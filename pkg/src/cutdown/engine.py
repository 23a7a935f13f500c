"""Drive a stepping rule to stream a cut-down sequence; verify candidates.

``generate`` yields symbols one at a time and keeps only O(n) state, so
arbitrarily long sequences stream without being materialized.  The binary
counter mode runs on a packed-integer inner loop (one machine word holds the
whole window for n <= 63 and a Python big int beyond); it implements exactly
the same rule as ``successor.binary_step``, which the test suite checks by
exhaustive output comparison.

``verify`` checks the defining property directly: every length-n window of
the cyclic sequence occurs at most once, all symbols are in range, and the
length matches when a target is given.  Windows are keyed by rolling base-k
integers; memory is O(L).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import successor
from .cutplan import CutParams, CutSet, cut_set, derive_params
from .words import Word

_CHUNK = 8192


@dataclass(frozen=True)
class SequenceSpec:
    """What to generate: order, alphabet, length, and which rule drives it.

    mode "counter" uses the stateful stepper (binary or k-ary); mode
    "successor" uses the context-free rule (binary only) and accepts an
    optional start window, defaulting to 0^(n-1) 1.  A successor-mode start
    must be a window of the target cycle; elsewhere behaviour is undefined.
    """

    n: int
    k: int
    L: int
    mode: str = "counter"
    start: Word | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("counter", "successor"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "successor" and self.k != 2:
            raise ValueError("successor mode requires k == 2")
        if self.start is not None:
            if self.mode != "successor":
                raise ValueError("start window applies to successor mode only")
            if len(self.start) != self.n:
                raise ValueError("start window must have length n")
            if not all(0 <= c < self.k for c in self.start):
                raise ValueError("start window has out-of-range symbols")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a verification: ok iff no duplicate cyclic window, no
    out-of-range symbol, and the expected length (when given) matches.
    Positions are 1-based."""

    ok: bool
    length: int
    first_duplicate: tuple[Word, tuple[int, int]] | None = None
    out_of_range_symbol: int | None = None


def generate(spec: SequenceSpec) -> Iterator[int]:
    """Stream the L symbols of the cut-down sequence described by ``spec``.

    Range errors from parameter derivation propagate unchanged.
    """
    params = derive_params(spec.n, spec.k, spec.L)
    cuts = cut_set(params.s, params.n)
    if spec.mode == "successor":
        return _successor_symbols(params, cuts, spec.start)
    if spec.k == 2:
        return _binary_counter_symbols(params, cuts)
    return _kary_counter_symbols(params, cuts)


def _pack(word: Word) -> int:
    value = 0
    for c in word:
        value = (value << 1) | c
    return value


def _binary_counter_symbols(params: CutParams, cuts: CutSet) -> Iterator[int]:
    # Inlined binary_step on packed ints.  The necklace probe of
    # word[1:] + (1,) is a single early-exit scan; when it fails (the common
    # case) the next symbol repeats the first one, no guard can fire, and
    # the step costs O(1) beyond the scan.  When the probe succeeds its
    # period doubles as the candidate period needed by the guards, so no
    # separate period pass is ever taken.
    n, L, m, h, t = params.n, params.L, params.m, params.h, params.t
    mask = (1 << n) - 1
    top = n - 1
    markers = [_pack(w) for w in cuts.markers]
    r1 = markers[0] if len(markers) > 0 else -1
    r2 = markers[1] if len(markers) > 1 else -1
    flag = n == 2 * m - 1
    special = _pack((0, 1) * (m - 1) + (1,)) if flag else -1
    # tails[i] keeps the probe bits at positions >= i (position 0 = MSB)
    tails = [(1 << (n - i)) - 1 for i in range(n + 1)]
    alpha = 1  # 0^(n-1) 1
    w = 1
    tprime = 0
    buf: list[int] = []
    append = buf.append
    remaining = L
    while remaining:
        block = _CHUNK if remaining > _CHUNK else remaining
        remaining -= block
        for _ in range(block):
            a1 = alpha >> top
            append(a1)
            shifted = (alpha << 1) & mask
            # p := period of probe = shifted|1 if it is a necklace, else 0.
            # The scan hops mismatch-to-mismatch: probe ^ (probe >> p) marks
            # every position disagreeing with the one p earlier, bit_length
            # finds the first, and its value decides reject vs period growth.
            if shifted >> top:
                p = 1 if (shifted | 1) == mask else 0
            else:
                probe = shifted | 1
                p = 1
                i = 1
                while True:
                    rel = (probe ^ (probe >> p)) & tails[i]
                    if not rel:
                        if n % p:
                            p = 0
                        break
                    b = rel.bit_length()
                    if (probe >> (b - 1)) & 1:
                        i = n - b + 1  # mismatch reads 1: period grows
                        p = i
                    else:
                        p = 0  # mismatch reads 0: a smaller rotation exists
                        break
            if p:
                x = 1 - a1
                cw = w - a1 + x
                if cw == m + 1:
                    x = 0  # w == m: the complement blocks the heavier branch
                elif cw == m and w == m - 1:
                    # x == 1 here, so the candidate is the probe itself and
                    # p is its period
                    if p > h:
                        x = 0
                    elif p == h:
                        if flag and (shifted | 1) == special:
                            flag = False
                        if tprime == t or (tprime + 1 == t and flag):
                            x = 0
                        else:
                            tprime += 1
                cand = shifted | x
                if cand == r1 or cand == r2:
                    x = 1 - x
                    cand = shifted | x
                alpha = cand
                w += x - a1
            else:
                # next symbol repeats a1; only the marker test can still fire
                cand = shifted | a1
                if cand == r1 or cand == r2:
                    alpha = shifted | (1 - a1)
                    w += 1 - 2 * a1
                else:
                    alpha = cand
        yield from buf
        buf.clear()


def _kary_counter_symbols(params: CutParams, cuts: CutSet) -> Iterator[int]:
    state = successor.kary_generator_state(params, cuts)
    for _ in range(params.L):
        yield successor.kary_step(state)


def _successor_symbols(params: CutParams, cuts: CutSet,
                       start: Word | None) -> Iterator[int]:
    n = params.n
    alpha = tuple(start) if start is not None else (0,) * (n - 1) + (1,)
    for _ in range(params.L):
        yield alpha[0]
        x = successor.cut_down_successor(alpha, params, cuts)
        alpha = alpha[1:] + (x,)


def verify(seq: Iterable[int], n: int, k: int,
           expected_len: int | None = None) -> VerifyReport:
    """Check that ``seq`` is a valid cut-down sequence body for (n, k).

    All len(seq) cyclic length-n windows (including wraparound) must be
    pairwise distinct and every symbol must lie in [0, k).  Failures are
    reported, not raised.
    """
    symbols: Sequence[int] = seq if isinstance(seq, (list, tuple)) else list(seq)
    length = len(symbols)
    if length < 1:
        raise ValueError("empty sequence")
    for idx, c in enumerate(symbols):
        if not 0 <= c < k:
            return VerifyReport(ok=False, length=length,
                                out_of_range_symbol=idx + 1)

    modulus = k ** n
    value = 0
    for j in range(n):  # first window; wraps (repeatedly) when length < n
        value = value * k + symbols[j % length]

    seen = {value: 1}
    duplicate = None
    for pos in range(2, length + 1):
        incoming = symbols[(pos + n - 2) % length]
        value = (value * k + incoming) % modulus
        first = seen.get(value)
        if first is not None:
            window = tuple(symbols[(pos - 1 + j) % length] for j in range(n))
            duplicate = (window, (first, pos))
            break
        seen[value] = pos

    ok = duplicate is None and (expected_len is None or length == expected_len)
    return VerifyReport(ok=ok, length=length, first_duplicate=duplicate)
