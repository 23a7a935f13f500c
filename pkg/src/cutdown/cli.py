"""Command-line interface.

Subcommands: generate, verify, params, rank, count.  Sequences are written
linearly; reading them cyclically is the verifier's job.  Words and
sequences use digit strings for alphabets up to size 10 and comma-separated
decimals beyond that.

Exit status: 0 on success, 1 when `verify` rejects its input, 2 for
argument or range errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .counting import count_lyndon, count_strings
from .cutplan import cut_set, derive_params
from .engine import SequenceSpec, VerifyReport, generate, verify
from .ranking import rank_lyndon
from .words import Word

_CHUNK = 8192


def _format_word(word: Word, k: int) -> str:
    if k <= 10:
        return "".join(str(c) for c in word)
    return ",".join(str(c) for c in word)


def _parse_symbols(text: str, fmt: str | None) -> list[int]:
    text = text.strip()
    if fmt == "csv" or (fmt is None and "," in text):
        return [int(part) for part in text.split(",") if part.strip()]
    return [int(ch) for ch in text if not ch.isspace()]


def _cmd_generate(args: argparse.Namespace) -> int:
    fmt = args.format or ("digits" if args.k <= 10 else "csv")
    if fmt == "digits" and args.k > 10:
        raise ValueError("digits format is ambiguous for k > 10; use --format csv")
    start = tuple(_parse_symbols(args.start, None)) if args.start else None
    spec = SequenceSpec(n=args.n, k=args.k, L=args.len, mode=args.mode,
                        start=start)
    out = sys.stdout
    buf: list[str] = []
    sep = "" if fmt == "digits" else ","
    first = True
    for symbol in generate(spec):
        buf.append(str(symbol))
        if len(buf) >= _CHUNK:
            out.write(sep.join(buf) if first else sep + sep.join(buf))
            first = False
            buf.clear()
    if buf:
        out.write(sep.join(buf) if first else sep + sep.join(buf))
    out.write("\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="ascii") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    symbols = _parse_symbols(text, args.format)
    report = verify(symbols, args.n, args.k, expected_len=args.len)
    if args.json:
        print(json.dumps(_report_json(report, args.k)))
    else:
        print(_report_text(report, args.k))
    return 0 if report.ok else 1


def _report_json(report: VerifyReport, k: int) -> dict:
    dup = None
    if report.first_duplicate is not None:
        window, (first, second) = report.first_duplicate
        dup = {"window": _format_word(window, k), "positions": [first, second]}
    return {
        "ok": report.ok,
        "length": report.length,
        "first_duplicate": dup,
        "out_of_range_symbol": report.out_of_range_symbol,
    }


def _report_text(report: VerifyReport, k: int) -> str:
    if report.ok:
        return f"ok: {report.length} symbols, all cyclic windows distinct"
    if report.out_of_range_symbol is not None:
        return (f"invalid: symbol out of range at position "
                f"{report.out_of_range_symbol}")
    if report.first_duplicate is not None:
        window, (first, second) = report.first_duplicate
        return (f"invalid: window {_format_word(window, k)} repeats at "
                f"positions {first} and {second} (cyclic)")
    return f"invalid: length {report.length} does not match --len"


def _cmd_params(args: argparse.Namespace) -> int:
    params = derive_params(args.n, args.k, args.len)
    cuts = cut_set(params.s, params.n)
    markers = [_format_word(w, args.k) for w in cuts.markers]
    if args.json:
        payload = {"n": params.n, "k": params.k, "L": params.L,
                   "m": params.m, "h": params.h, "t": params.t, "s": params.s,
                   "markers": markers}
        print(json.dumps(payload))
    else:
        width = max(len("markers"), 1)
        for name in ("n", "k", "L", "m", "h", "t", "s"):
            print(f"{name:<{width}} {getattr(params, name)}")
        print(f"{'markers':<{width}} {' '.join(markers) if markers else '-'}")
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    word = tuple(_parse_symbols(args.word, None))
    print(rank_lyndon(word, args.k))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.lyndon:
        print(count_lyndon(args.n, args.w, args.k))
    else:
        print(count_strings(args.n, args.w, args.k))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutdown",
        description="Generate and inspect cut-down de Bruijn sequences: "
                    "cyclic k-ary sequences of any length L with "
                    "k^(n-1) < L <= k^n and no repeated length-n window.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a length-L cut-down sequence")
    gen.add_argument("--n", type=int, required=True, help="window length")
    gen.add_argument("--k", type=int, default=2, help="alphabet size (default 2)")
    gen.add_argument("--len", type=int, required=True, metavar="L",
                     help="target length, k^(n-1) < L <= k^n")
    gen.add_argument("--mode", choices=("counter", "successor"),
                     default="counter",
                     help="counter: stateful stepper (any k); successor: "
                          "context-free rule (k=2 only)")
    gen.add_argument("--start", help="start window for successor mode")
    gen.add_argument("--format", choices=("digits", "csv"),
                     help="output format (default digits for k <= 10)")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify",
                         help="check that every cyclic window occurs at most once")
    ver.add_argument("--n", type=int, required=True, help="window length")
    ver.add_argument("--k", type=int, default=2, help="alphabet size (default 2)")
    ver.add_argument("--len", type=int, default=None, metavar="L",
                     help="also require this exact length")
    ver.add_argument("--format", choices=("digits", "csv"),
                     help="input format (default: auto-detect)")
    ver.add_argument("--json", action="store_true", help="JSON report")
    ver.add_argument("input", nargs="?", default=None,
                     help="input file (default: standard input)")
    ver.set_defaults(func=_cmd_verify)

    par = sub.add_parser("params",
                         help="show the derived cut parameters and markers")
    par.add_argument("--n", type=int, required=True)
    par.add_argument("--k", type=int, default=2)
    par.add_argument("--len", type=int, required=True, metavar="L")
    par.add_argument("--json", action="store_true", help="JSON output")
    par.set_defaults(func=_cmd_params)

    rnk = sub.add_parser("rank",
                         help="1-based lexicographic rank of a word's Lyndon "
                              "rotation among Lyndon words of equal length "
                              "and weight")
    rnk.add_argument("word", help="an aperiodic word")
    rnk.add_argument("--k", type=int, default=2)
    rnk.set_defaults(func=_cmd_rank)

    cnt = sub.add_parser("count", help="exact string / Lyndon word counts")
    cnt.add_argument("--n", type=int, required=True, help="word length")
    cnt.add_argument("--w", type=int, required=True, help="weight")
    cnt.add_argument("--k", type=int, default=2)
    cnt.add_argument("--lyndon", action="store_true",
                     help="count Lyndon words instead of all strings")
    cnt.set_defaults(func=_cmd_count)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
