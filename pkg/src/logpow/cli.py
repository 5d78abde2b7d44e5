"""Command-line front end.

Subcommands: ``coeff`` (exact coefficient queries), ``valtable`` (valuation
tables with predictions), ``bernoulli``, ``reconstruct``, and ``verify``
(verification sweeps).  All numbers are parsed exactly: integers, or
rationals as ``a/b``; nothing is ever parsed as a float.

Exit codes are a stable contract for CI use: 0 all-pass, 1 verification
failure, 2 usage error, 3 hypothesis violation.

Negative values work with the standard flag syntax (``-t -9``); for rational
flags use the ``=`` form when the value starts with a minus (``--c1=-3/7``).
"""

from __future__ import annotations

import argparse
import itertools
import sys

from . import harness, series
from .exact_arith import HypothesisError, parse_rational

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3

SELECTORS = (
    "main",
    "lemma18",
    "c-recursion",
    "cor17",
    "zero",
    "reconstruct",
    "prop31",
    "prop32",
    "all",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logpow",
        description="Exact coefficient and p-adic valuation toolkit for powers of log(1+x)/x.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_coeff = sub.add_parser("coeff", help="print the coefficient of x^n in the t-th power")
    p_coeff.add_argument("-t", type=int, required=True, help="integer exponent (may be negative)")
    p_coeff.add_argument("-n", type=int, required=True, help="coefficient degree")
    p_coeff.set_defaults(func=cmd_coeff)

    p_val = sub.add_parser("valtable", help="valuation table with closed-form predictions")
    p_val.add_argument("-p", type=int, required=True, help="prime")
    p_val.add_argument("-t", type=int, required=True, help="integer exponent (may be negative)")
    p_val.add_argument("-m", "--m-max", dest="m_max", type=int, required=True,
                       help="table rows m = 1..m_max (must be <= p^nu_p(t))")
    p_val.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_val.set_defaults(func=cmd_valtable)

    p_ber = sub.add_parser("bernoulli", help="print the n-th Bernoulli number")
    p_ber.add_argument("-n", type=int, required=True)
    p_ber.set_defaults(func=cmd_bernoulli)

    p_rec = sub.add_parser("reconstruct",
                           help="series with the zero-coefficient property, from c1")
    p_rec.add_argument("--c1", type=parse_rational, required=True,
                       help="coefficient of x (exact rational, nonzero)")
    p_rec.add_argument("--order", type=int, required=True, help="truncation order")
    p_rec.set_defaults(func=cmd_reconstruct)

    p_ver = sub.add_parser("verify", help="run a verification sweep; exit 0 iff all pass")
    p_ver.add_argument("selector", choices=SELECTORS)
    p_ver.add_argument("--p", type=int, help="prime (default depends on selector)")
    p_ver.add_argument("--t", type=int, help="integer exponent (may be negative)")
    p_ver.add_argument("--m-max", "--max-m", dest="m_max", type=int,
                       help="range bound for m where applicable")
    p_ver.add_argument("--c1", type=parse_rational, help="seed coefficient for reconstruct")
    p_ver.add_argument("--order", type=int, help="truncation order for reconstruct")
    p_ver.add_argument("--samples", type=int, help="random sample count for lemma18")
    p_ver.add_argument("--seed", type=int, default=0, help="RNG seed for random corpora")
    p_ver.add_argument("--max-r", type=int, help="tuple length bound for c-recursion/cor17")
    p_ver.add_argument("--max-entry", type=int, help="tuple entry bound for c-recursion/cor17")
    p_ver.add_argument("--random-tuples", type=int,
                       help="extra random tuples for c-recursion/cor17")
    p_ver.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def cmd_coeff(args) -> int:
    if args.n < 0:
        raise ValueError(f"n must be nonnegative, got {args.n}")
    if args.t == 0 and args.n > 0:
        raise ValueError("t = 0 is only supported for n = 0")
    print((series.log_series(args.n) ** args.t)[args.n])
    return EXIT_OK


def cmd_valtable(args) -> int:
    reports = harness.verify_main(args.p, args.t, args.m_max)
    if args.format == "json":
        for line in harness.render_json_lines(reports):
            print(line)
    else:
        rows = [("m", "actual", "predicted", "pass")]
        for r in reports:
            rows.append((str(r.m), str(r.actual), str(r.predicted),
                         "true" if r.passed else "false"))
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            print("\t".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    print(series.bernoulli(args.n))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    print(harness.reconstruct(args.c1, args.order).to_json())
    return EXIT_OK


def _tuple_corpus(args):
    max_r = 4 if args.max_r is None else args.max_r
    max_entry = 4 if args.max_entry is None else args.max_entry
    count = 100 if args.random_tuples is None else args.random_tuples
    return itertools.chain(
        harness.iter_small_tuples(max_r, max_entry),
        harness.random_large_tuples(count, args.seed),
    )


def _selector_reports(selector: str, args) -> list:
    def d(value, default):
        return default if value is None else value

    if selector == "main":
        return harness.verify_main(d(args.p, 3), d(args.t, 9), d(args.m_max, 9))
    if selector == "zero":
        return harness.verify_zero_coeffs(d(args.m_max, 20))
    if selector == "reconstruct":
        c1 = parse_rational("1/2") if args.c1 is None else args.c1
        return harness.verify_reconstruct(c1, d(args.order, 20))
    if selector == "lemma18":
        kwargs = {}
        if args.p is not None:
            kwargs["primes"] = (args.p,)
        return list(
            harness.verify_falling_valuation_random(d(args.samples, 1000), args.seed, **kwargs)
        )
    if selector == "c-recursion":
        return list(harness.verify_c_coeffs(_tuple_corpus(args)))
    if selector == "cor17":
        primes = (args.p,) if args.p is not None else (2, 3, 5, 7)
        return list(harness.verify_valuation_inequality(_tuple_corpus(args), primes))
    if selector == "prop31":
        return harness.verify_offset_bound(d(args.p, 3), d(args.t, 9))
    if selector == "prop32":
        return harness.verify_offset_equality(d(args.p, 5), d(args.t, 25))
    raise ValueError(f"unknown selector {selector!r}")


def cmd_verify(args) -> int:
    if args.selector == "all":
        reports = []
        for sel in SELECTORS[:-1]:
            reports.extend(_selector_reports(sel, args))
    else:
        reports = list(_selector_reports(args.selector, args))
    if args.format == "json":
        for line in harness.render_json_lines(reports):
            print(line)
    else:
        print(harness.render_tsv(reports))
    return EXIT_OK if harness.all_pass(reports) else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
