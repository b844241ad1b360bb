"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (reject, not equivalent, invalid,
violation found, search exhausted), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import io
from .analysis import (LanguageOracle, SearchInfeasible, bounded_equiv, exact_equiv,
                       pin_falsify, search_model, words)
from .core import OneWayMachine, validate
from .sim import accepts, format_trace, run_mrfa, run_sweeping
from .transforms import (both_sides_to_one_side, minimize, srfa_to_mrfa, srfa_to_three_pass,
                         to_dfa, unary_mrfa_to_srfa)
from .witnesses import CATALOG, witness

TRANSFORMS = {
    "one-side": both_sides_to_one_side,
    "mrfa": srfa_to_mrfa,
    "three-pass": srfa_to_three_pass,
    "unary-srfa": unary_mrfa_to_srfa,
    "dfa": to_dfa,
    "min-dfa": lambda m: minimize(to_dfa(m)),
}


class UsageError(Exception):
    pass


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _show(word: str) -> str:
    return word if word else "ε"


def cmd_validate(args) -> int:
    m = io.load(args.file, strict=False)
    report = validate(m)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def cmd_run(args) -> int:
    m = io.load(args.file)
    if isinstance(m, OneWayMachine):
        res = run_mrfa(m, args.string)
        print("accept" if res.accepted else "reject")
        if args.trace:
            for q, trace in res.traces.items():
                print(f"-- from {m.states[q]}")
                print(format_trace(m, trace, args.string))
        return 0 if res.accepted else 1
    trace = run_sweeping(m, args.string)
    print("accept" if trace.accepted else "reject")
    if args.trace:
        print(format_trace(m, trace, args.string))
    else:
        print(f"verdict: {trace.verdict.value}")
        print(f"passes: {trace.pass_count}")
    return 0 if trace.accepted else 1


def cmd_transform(args) -> int:
    m = io.load(args.file)
    _write(io.emit(TRANSFORMS[args.to](m)), args.output)
    return 0


def cmd_equiv(args) -> int:
    a, b = io.load(args.file_a), io.load(args.file_b)
    if args.max_len is not None:
        res = bounded_equiv(a, b, args.max_len)
        scope = f"up to length {args.max_len}"
    else:
        res = exact_equiv(a, b)
        scope = "exact"
    if res.equivalent:
        print(f"equivalent ({scope})")
        return 0
    print(f"not equivalent ({scope})")
    print(f"counterexample: {res.counterexample!r}")
    return 1


def cmd_enumerate(args) -> int:
    m = io.load(args.file)
    for w in words(m.alphabet, args.max_len):
        if accepts(m, w):
            print(_show(w))
    return 0


def cmd_witness(args) -> int:
    spec = witness(args.name, args.k)
    _write(io.emit(spec.machine), args.output)
    return 0


def _reps(text: str) -> int:
    if text == "auto":
        return 0
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer or 'auto'") from None
    if value < 1:
        raise argparse.ArgumentTypeError("reps must be at least 1")
    return value


def cmd_pin_check(args) -> int:
    m = io.load(args.file)
    res = pin_falsify(m, args.max_x, args.max_y, args.max_z, args.reps or None)
    print(res.describe())
    return 1 if res.violation else 0


def cmd_search(args) -> int:
    target = io.load(args.target)
    alphabet = tuple(args.alphabet)
    if set(alphabet) != set(target.alphabet):
        raise UsageError(f"--alphabet {args.alphabet} differs from the target's "
                         f"{''.join(target.alphabet)}")
    oracle = LanguageOracle(alphabet, lambda w: accepts(target, w), args.target)
    report = search_model(args.cls, args.max_states, alphabet, oracle, args.max_len,
                          max_initials=args.max_initials, max_accepting=args.max_accepting,
                          workers=args.workers, max_candidates=args.max_candidates)
    print("\n".join(report.lines()))
    if report.found is not None:
        print("---")
        sys.stdout.write(io.emit(report.found))
        return 0
    return 1


def cmd_dot(args) -> int:
    _write(io.to_dot(io.load(args.file)), args.output)
    return 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revfa", description="Reversible finite automata toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a machine against its declared kind")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("run", help="simulate a machine on a string")
    s.add_argument("file")
    s.add_argument("string", help='input symbols; "" for the empty string')
    s.add_argument("--trace", action="store_true", help="print every configuration")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("transform", help="apply a construction")
    s.add_argument("file")
    s.add_argument("--to", required=True, choices=sorted(TRANSFORMS))
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("equiv", help="compare the languages of two machines")
    s.add_argument("file_a")
    s.add_argument("file_b")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--max-len", type=_nonneg, help="compare all strings up to this length")
    g.add_argument("--exact", action="store_true", help="decide equality exactly (default)")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("enumerate", help="list accepted strings in length-lex order")
    s.add_argument("file")
    s.add_argument("--max-len", type=_nonneg, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("witness", help="emit a catalog machine")
    s.add_argument("name", choices=list(CATALOG))
    s.add_argument("--k", type=int, help="size parameter for Lk-union and Lk-srfa")
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("pin-check", help="look for x, y, z with xy+z in L but xz not in L")
    s.add_argument("file")
    s.add_argument("--max-x", type=_nonneg, default=3)
    s.add_argument("--max-y", type=_nonneg, default=3)
    s.add_argument("--max-z", type=_nonneg, default=3)
    s.add_argument("--reps", type=_reps, default=0,
                   help="repetitions of y to test, or 'auto' for #states+1 (default)")
    s.set_defaults(func=cmd_pin_check)

    s = sub.add_parser("search", help="bounded search for a small machine matching a target")
    s.add_argument("--class", dest="cls", required=True, choices=["1rfa", "1perfa", "mrfa"])
    s.add_argument("--max-states", type=_positive, required=True)
    s.add_argument("--alphabet", required=True, help="symbols as one string, e.g. ab")
    s.add_argument("--target", required=True, help="machine file defining the target language")
    s.add_argument("--max-len", type=_nonneg, required=True)
    s.add_argument("--max-initials", type=_positive, help="cap on initial states (mrfa)")
    s.add_argument("--max-accepting", type=_nonneg, help="cap on accepting states")
    s.add_argument("--workers", type=_positive, default=1, help="parallel partitions")
    s.add_argument("--max-candidates", type=float, default=1e10,
                   help="refuse searches whose naive space exceeds this")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("dot", help="render a machine as a DOT graph")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (io.ParseError, OSError, ValueError, KeyError, UsageError, SearchInfeasible) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
