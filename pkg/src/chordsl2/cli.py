"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import Poly
from .bernoulli import bernoulli_poly, modified_bernoulli, q_poly
from .diagram import DiagramError, enumerate_matchings, parse_dow
from .oracle import eval_oracle
from .series import main_series, q_series, verify, wheels_exp_series
from .weight import eval_cv
from .wheels import WheelMonomial, eval_sigma, eval_wheel_union

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(p: Poly, as_json: bool):
    print(_dumps(p.to_json()) if as_json else str(p))


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def cmd_eval(args) -> int:
    text = sys.stdin.read() if args.dow == "-" else args.dow
    try:
        d = parse_dow(text)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.both:
        fast, slow = eval_cv(d), eval_oracle(d)
        if args.json:
            print(_dumps({"recurrence": fast.to_json(), "oracle": slow.to_json(), "equal": fast == slow}))
        else:
            print(f"recurrence: {fast}")
            print(f"oracle:     {slow}")
        return EXIT_OK if fast == slow else EXIT_FAIL
    _emit(eval_oracle(d) if args.oracle else eval_cv(d), args.json)
    return EXIT_OK


def cmd_sigma(args) -> int:
    _emit(eval_sigma(args.n, args.threads), args.json)
    return EXIT_OK


def cmd_wheel(args) -> int:
    _emit(eval_wheel_union(WheelMonomial(tuple(args.parts)), args.threads), args.json)
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    if args.kind == "poly":
        _emit(bernoulli_poly(args.n), args.json)
    elif args.kind == "q":
        if args.n == 0:
            _emit(Poly.const(1), args.json)
        else:
            _emit(q_poly(args.n), args.json)
    else:
        try:
            value = modified_bernoulli(args.n)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.json:
            print(_dumps({"value": [str(value.numerator), str(value.denominator)]}))
        else:
            print(value)
    return EXIT_OK


def cmd_series(args) -> int:
    series = {
        "main": main_series(args.N, args.threads),
        "q": q_series(args.N),
        "wheels": wheels_exp_series(args.N, threads=args.threads),
    }
    if args.json:
        print(_dumps({k: [t.to_json() for t in s] for k, s in series.items()}))
        return EXIT_OK
    for n in range(args.N + 1):
        print(f"h^{2 * n}:")
        for name, s in series.items():
            print(f"  {name:<6} {s[n]}")
    return EXIT_OK


def oracle_sweep(max_n: int) -> dict:
    checked, mismatches = 0, []
    for n in range(max_n + 1):
        for d, _ in enumerate_matchings(n):
            checked += 1
            if eval_cv(d) != eval_oracle(d):
                mismatches.append(str(d))
    return {"max_chords": max_n, "checked": checked, "mismatches": mismatches}


def cmd_verify(args) -> int:
    def progress(term):
        print(f"order {term.n}: {'ok' if term.passed else 'FAIL'} in {term.seconds:.3f}s", file=sys.stderr)

    report = verify(args.N, threads=args.threads, progress=progress)
    start = time.perf_counter()
    sweep = oracle_sweep(min(args.N, 4))
    print(f"oracle sweep: {sweep['checked']} diagrams in {time.perf_counter() - start:.3f}s", file=sys.stderr)
    ok = report.passed and not sweep["mismatches"]

    if args.json:
        out = report.to_json()
        out["oracle"] = sweep
        out["pass"] = ok
        print(_dumps(out))
    else:
        print(report.to_text())
        print(f"oracle sweep (n <= {sweep['max_chords']}): {sweep['checked']} diagrams, "
              f"{len(sweep['mismatches'])} mismatches")
        print("PASS" if ok else "FAIL")
    if not ok:
        bad = report.first_failure()
        if bad is not None:
            print(f"failing term n={bad.n}: main={bad.main} q={bad.q} wheels={bad.wheels}", file=sys.stderr)
        for word in sweep["mismatches"]:
            print(f"oracle mismatch: {word}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordsl2", description="Exact sl2 weight system on chord diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    threaded = argparse.ArgumentParser(add_help=False)
    threaded.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                          help="worker threads for matching evaluation (default: logical cores)")

    p = sub.add_parser("eval", parents=[common], help="W of one diagram given as a double-occurrence word")
    p.add_argument("dow", help="e.g. '1 2 1 2'; '-' reads stdin")
    p.add_argument("--oracle", action="store_true", help="use the brute-force evaluator")
    p.add_argument("--both", action="store_true", help="run both evaluators; exit 1 if they differ")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sigma", parents=[common, threaded], help="W(Sigma_n)")
    p.add_argument("n", type=_natural)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("wheel", parents=[common, threaded], help="W of a disjoint union of wheels")
    p.add_argument("parts", type=_positive, nargs="+", help="n_i for each wheel w_{2 n_i}")
    p.set_defaults(func=cmd_wheel)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli objects")
    p.add_argument("kind", choices=["poly", "modified", "q"])
    p.add_argument("n", type=_natural, help="degree (poly), even index 2n (modified), or n (q)")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("series", parents=[common, threaded], help="the three even series up to h^{2N}")
    p.add_argument("N", type=_natural)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common, threaded], help="check all identities up to order N")
    p.add_argument("N", type=_positive)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
