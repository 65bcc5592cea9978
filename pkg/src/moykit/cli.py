"""Command-line entry point.

Exit codes: 0 success / identity passed, 1 I/O, parse or validation
failure, 2 identity violation (the verifying commands), so CI can gate on
the identity suites.
"""

import argparse
import json
import os
import sys

from . import invariant, mf, moy, relations, statesum
from .qpoly import LaurentPoly


def _load(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit2(1, "cannot read %s: %s" % (path, exc))
    try:
        word = moy.parse(text)
    except moy.ParseError as exc:
        raise SystemExit2(1, "%s: %s" % (path, exc))
    diags = moy.validate(word)
    if diags:
        for d in diags:
            sys.stderr.write("%s: event %d: %s\n" % (path, d.index, d.message))
        raise SystemExit2(1, "%s: validation failed" % path)
    return word


class SystemExit2(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _resolve_n(args, word):
    if args.n is not None:
        return args.n
    if word is not None and word.n_hint is not None:
        return word.n_hint
    raise SystemExit2(1, "no level given: pass --n or put 'N <int>' in the file")


def _emit_poly(args, payload, poly, tau_odd=None, report=None):
    payload = dict(payload)
    payload["poly"] = poly.to_triples()
    if tau_odd is not None:
        payload["tau_odd"] = tau_odd.to_triples()
    if report is not None:
        payload["report"] = report
    if args.output == "json":
        print(json.dumps(payload))
    elif args.output == "csv":
        print("exponent_num,exponent_den,coefficient")
        for num, den, c in payload["poly"]:
            print("%d,%d,%d" % (num, den, c))
        if tau_odd is not None:
            print("tau_odd")
            for num, den, c in payload["tau_odd"]:
                print("%d,%d,%d" % (num, den, c))
    else:
        line = str(poly)
        if tau_odd is not None and tau_odd:
            line += "  +  tau*(%s)" % tau_odd
        print(line)
        if report is not None:
            for k, v in report.items():
                print("  %s: %s" % (k, v))


def cmd_bracket(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    if moy.has_crossings(word):
        poly = invariant.bracket_link(word, n)
    elif args.engine == "enumerate":
        poly = statesum.bracket_enumerate(word, n, threads=args.threads)
    else:
        poly = statesum.bracket_dp(word, n)
    _emit_poly(args, {"n": n, "input": args.file}, poly)
    return 0


def cmd_rt(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    poly = invariant.rt_poly(word, n)
    _emit_poly(args, {"n": n, "input": args.file}, poly)
    return 0


def cmd_gdim(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    report = mf.verify_gdim_equals_bracket(word, n, d_max=args.max_deg)
    even = LaurentPoly.from_triples(report["gdim_even"])
    odd = LaurentPoly.from_triples(report["gdim_odd"])
    _emit_poly(args, {"n": n, "input": args.file}, even, tau_odd=odd, report=report)
    return 0 if report["pass"] else 2


def cmd_euler(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    euler = invariant.complex_euler(word, n, gdim_source=args.gdim_source)
    rt = invariant.rt_poly(word, n)
    report = {"matches_rt": euler == rt}
    _emit_poly(args, {"n": n, "input": args.file}, euler, report=report)
    return 0 if report["matches_rt"] else 2


def cmd_parity(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    ok = invariant.parity_check(word, n)
    if args.output == "json":
        print(json.dumps({"n": n, "input": args.file, "parity_ok": ok}))
    else:
        print("parity_ok: %s" % ok)
    return 0 if ok else 2


def cmd_states(args):
    word = _load(args.file)
    n = _resolve_n(args, word)
    for labels, doubled in statesum.enumerate_states(word, n):
        rec = {
            "labels": [list(lab) for lab in labels],
            "weight": LaurentPoly({doubled: 1}).to_triples(),
        }
        print(json.dumps(rec))
    return 0


def cmd_verify_relations(args):
    import random

    n = args.n if args.n is not None else 3
    failures = relations.sweep(n, max_width=args.max_width)
    spot_checks = 0
    if args.seed is not None:
        # seeded spot checks: the two engines must agree on random words
        rng = random.Random(args.seed)
        for _ in range(25):
            w = moy.random_closed_word(rng, max_grow=3, max_color=min(n, 3))
            spot_checks += 1
            dp = statesum.bracket_dp(w, n)
            if dp != statesum.bracket_enumerate(w, n):
                failures.append((("engines", moy.serialize(w)), str(dp), "enumerate"))
    if args.output == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "spot_checks": spot_checks,
                    "failures": [
                        {"instance": list(map(str, tag)), "lhs": l, "rhs": r}
                        for tag, l, r in failures
                    ],
                }
            )
        )
    else:
        if failures:
            for tag, l, r in failures:
                print("FAIL %s: %s != %s" % (tag, l, r))
        else:
            print("all relation instances hold at N=%d" % n)
    return 0 if not failures else 2


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="moykit",
        description="Colored sl(N) graph polynomials, link invariants, and "
        "matrix-factorization homology dimensions, exactly.",
    )
    parser.add_argument("--n", type=int, default=None, help="the level N >= 1")
    parser.add_argument(
        "--engine",
        choices=["dp", "enumerate"],
        default="dp",
        help="bracket evaluation engine",
    )
    parser.add_argument("--max-deg", type=int, default=None)
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("MOYKIT_THREADS", "1")),
        help="worker threads for state enumeration",
    )
    parser.add_argument(
        "--output", choices=["json", "csv", "pretty"], default="json"
    )
    parser.add_argument("--seed", type=int, default=None, help="property sweep seed")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, needs_file in [
        ("bracket", cmd_bracket, True),
        ("rt", cmd_rt, True),
        ("gdim", cmd_gdim, True),
        ("euler", cmd_euler, True),
        ("parity", cmd_parity, True),
        ("states", cmd_states, True),
        ("verify-relations", cmd_verify_relations, False),
    ]:
        p = sub.add_parser(name)
        if needs_file:
            p.add_argument("file")
        p.set_defaults(fn=fn)
    sub.choices["euler"].add_argument(
        "--gdim-source", choices=["bracket", "mf"], default="bracket"
    )
    sub.choices["verify-relations"].add_argument(
        "--max-width", type=int, default=None
    )

    args = parser.parse_args(argv)
    if args.n is not None and args.n < 1:
        parser.error("--n must be >= 1")
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        sys.stderr.write(exc.message + "\n")
        return exc.code
    except ValueError as exc:
        sys.stderr.write(str(exc) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
