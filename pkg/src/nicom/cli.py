"""Command-line front end: compute, verify, prove, bench.

Exit codes: 0 success/pass, 1 verification failure or refutation,
2 usage error, 3 resource guard exceeded.  JSON output renders big
integers as decimal strings and rationals as "num/den" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from time import perf_counter

from . import closed_forms as cf
from . import verify_suite
from .moment_sums import (
    BruteForceGuardError,
    MomentKey,
    MomentTable,
    a_brute,
    a_prime,
    a_prime_brute,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class UsageError(Exception):
    pass


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, indent=2, sort_keys=True)


def _compute_value(sum_kind: str, k: int, s: int, j: int, engine: str) -> int:
    if sum_kind == "A":
        if engine == "brute":
            return a_brute(MomentKey(k, s, j))
        if engine == "rec":
            return MomentTable().a(k, s, j)
        if j != 0:
            raise UsageError("closed engine supports --j 0 only")
        if s == 0:
            return _fk_minus_one(k)
        if s == 1:
            return cf.lemma2_a(k)
        if s == 3:
            return cf.lemma3_a3(k)
        raise UsageError("closed engine supports --s in {0, 1, 3} for A")
    # Aprime
    if j != 0:
        raise UsageError("--j applies to --sum A only")
    if engine == "brute":
        return a_prime_brute(k, s)
    if engine == "rec":
        return a_prime(k, s, MomentTable())
    if s == 0:
        return _fk_minus_one(k)
    if s == 1:
        return cf.lemma2_a_prime(k)
    if s == 3:
        return cf.lemma4_a_prime3(k)
    raise UsageError("closed engine supports --s in {0, 1, 3} for Aprime")


def _fk_minus_one(k: int) -> int:
    from .fib_lucas import fib

    return fib(k) - 1


def _cmd_compute(args) -> int:
    value = _compute_value(args.sum, args.k, args.s, args.j, args.engine)
    if args.format == "json":
        print(canonical_json({"sum": args.sum, "k": args.k, "s": args.s,
                              "j": args.j, "engine": args.engine,
                              "value": str(value)}))
    elif args.format == "csv":
        _print_csv([["sum", "k", "s", "j", "engine", "value"],
                    [args.sum, args.k, args.s, args.j, args.engine, str(value)]])
    else:
        print(value)
    return EXIT_OK


def _cmd_verify(args) -> int:
    engines = tuple(args.engines.split(",")) if args.engines else None
    report = verify_suite.verify_claim(
        args.claim, k_max=args.kmax, engines=engines, deep=args.deep
    )
    if args.format == "json":
        print(canonical_json(report.to_dict()))
    elif args.format == "csv":
        rows = [["claim", "k", "lhs", "rhs", "equal"]]
        rows += [
            [report.claim, r.index, r.lhs, r.rhs, str(r.equal).lower()]
            for r in report.rows
            if not r.skipped
        ]
        _print_csv(rows)
    else:
        lo, hi = report.range
        print(f"{report.claim}: {report.verdict} "
              f"(indices {lo}..{hi}, engines {','.join(report.engines)})")
        for f in report.failures:
            print(f"  FAIL at {f['index']}: {f['lhs']} != {f['rhs']}")
        if report.skipped:
            print(f"  skipped (guard): {report.skipped}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_prove(args) -> int:
    certs = verify_suite.prove_claim(args.claim, extra_window=args.window)
    if args.format == "json":
        print(canonical_json([c.to_dict() for c in certs]))
    elif args.format == "csv":
        rows = [["claim", "shape", "bound", "degree", "agreed_terms", "window", "verdict"]]
        rows += [[c.claim, c.shape, c.bound, c.degree, c.agreed_terms, c.window, c.verdict]
                 for c in certs]
        _print_csv(rows)
    else:
        for c in certs:
            print(f"{c.claim}: {c.verdict} "
                  f"(degree {c.degree}, agreed {c.agreed_terms}, window {c.window})")
    return EXIT_OK if all(c.certified for c in certs) else EXIT_FAIL


def _digest(value: int) -> dict:
    digits = str(abs(value))
    return {
        "digits": len(digits),
        "head": digits[:8],
        "tail": digits[-8:],
        "negative": value < 0,
    }


def _cmd_bench(args) -> int:
    start = perf_counter()
    value = _compute_value("A", args.k, args.s, 0,
                           "brute" if args.engine == "brute" else args.engine)
    elapsed = perf_counter() - start
    out = {"k": args.k, "s": args.s, "engine": args.engine,
           "seconds": round(elapsed, 6), **_digest(value)}
    print(canonical_json(out))
    return EXIT_OK


def _print_csv(rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nicom",
        description="Exact golden-ratio Beatty moment sums and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate a moment sum")
    p.add_argument("--sum", choices=["A", "Aprime"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--engine", choices=["brute", "rec", "closed"], default="rec")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="check a claim index by index")
    p.add_argument("--claim", choices=list(verify_suite.CLAIM_IDS), required=True)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--engines", default=None,
                   help="comma-separated subset of brute,recursive,closed")
    p.add_argument("--deep", action="store_true",
                   help="extend default ranges (theorem1/case4l to 100)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("prove", help="finite recurrence certification of a claim")
    p.add_argument("--claim", choices=list(verify_suite.PROVABLE_CLAIMS), required=True)
    p.add_argument("--window", type=int, default=None,
                   help="corroboration window (default 2x the annihilator degree)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("bench", help="time an engine at a given index")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--engine", choices=["brute", "rec", "closed"], default="closed")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except BruteForceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
