"""Command-line interface.

Exit codes: 0 success, 2 formula parse error, 3 invalid arguments,
4 resource guard exceeded. Tautology status is data, never an error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import characteristics, counting, oracle, valuations
from .formula import ParseError, parse, to_string
from .patterns import (
    ResourceGuardError,
    count_patterns,
    enumerate_patterns,
    guard_limit,
    parse_pattern,
    write_forest_dot,
)

EXIT_PARSE = 2
EXIT_ARGS = 3
EXIT_GUARD = 4

LIST_LIMIT = 10**6


class ArgumentError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors get exit code 3 rather than argparse's 2, which means a parse error here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"invalid argument: {message}", file=sys.stderr)
        sys.exit(EXIT_ARGS)


def _rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _emit(args, payload, text: str) -> None:
    if args.json:
        if args.timing and isinstance(payload, dict):
            payload = {**payload, "seconds": round(time.perf_counter() - args.started, 6)}
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)
        if args.timing:
            print(f"time: {time.perf_counter() - args.started:.3f}s")


def _positive(name: str, value: int | None) -> None:
    if value is not None and value < 1:
        raise ArgumentError(f"{name} must be a positive integer, got {value}")


# -- chi / classify -----------------------------------------------------------

def _chi_report(args):
    f = parse(args.formula)
    _positive("--vars", args.vars)
    _positive("--k", args.k)
    try:
        n = characteristics.resolve_n(f, args.vars)
    except ValueError as e:
        raise ArgumentError(str(e)) from None
    return characteristics.chi_vector(f, n, threads=args.threads)


def _verdict(report) -> str:
    if report.godel_infinity_tautology:
        return "tautology of infinite-valued Godel logic"
    k = report.least_k_not_tautology
    return f"not a tautology: fails with {k + 1} truth values (chi_{k} < P({report.n},{k}))"


def cmd_chi(args) -> int:
    report = _chi_report(args)
    payload = report.to_json()
    lines = [
        f"formula: {to_string(report.formula)}",
        f"n: {report.n}",
        f"{'k':>3}  {'chi_k':>12}  {'P(n,k)':>12}  tautology",
    ]
    for k, (c, p) in enumerate(zip(report.chi, report.p_row), 1):
        lines.append(f"{k:>3}  {c:>12}  {p:>12}  {'yes' if c == p else 'no'}")
    lines += [
        f"boolean models: {report.boolean_model_count}",
        f"classical tautology: {_yn(report.classical_tautology)}",
        f"classical contradiction: {_yn(report.classical_contradiction)}",
        f"Godel infinity tautology: {_yn(report.godel_infinity_tautology)}",
        f"least k not tautology: {report.least_k_not_tautology if report.least_k_not_tautology else '-'}",
    ]
    if args.k is not None:
        k = min(args.k, report.n + 1)
        payload.update(k=args.k, chi_k=str(report.chi[k - 1]), tautology_k=report.is_tautology(k))
        lines.append(f"chi_{args.k}: {report.chi[k - 1]} (tautology with {args.k + 1} values: {_yn(report.is_tautology(k))})")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    report = _chi_report(args)
    payload = report.to_json()
    if args.k is not None:
        ok = report.is_tautology(args.k)
        verdict = f"{'tautology' if ok else 'not a tautology'} with {args.k + 1} truth values"
        payload.update(k=args.k, chi_k=str(report.chi[min(args.k, report.n + 1) - 1]), tautology_k=ok)
    else:
        verdict = _verdict(report)
    payload["verdict"] = verdict
    _emit(args, payload, verdict)
    return 0


def _yn(b: bool) -> str:
    return "yes" if b else "no"


# -- table --------------------------------------------------------------------

def cmd_table(args) -> int:
    _positive("--max-n", args.max_n)
    _positive("--max-k", args.max_k)
    rows = (counting.tree_table if args.tree else counting.table)(args.max_n, args.max_k)
    width = max(len(str(x)) for row in rows for x in row) + 2
    head = "n\\k" if not args.tree else "T n\\k"
    lines = [f"{head:>6}" + "".join(f"{k:>{width}}" for k in range(1, args.max_k + 1))]
    for n, row in enumerate(rows, 1):
        lines.append(f"{n:>6}" + "".join(f"{x:>{width}}" for x in row))
    _emit(args, [[str(x) for x in row] for row in rows], "\n".join(lines))
    return 0


# -- patterns -----------------------------------------------------------------

def cmd_patterns(args) -> int:
    _positive("--n", args.n)
    _positive("--max-height", args.max_height)
    max_height = args.n + 1 if args.max_height is None else args.max_height
    if args.dot:
        if args.dot == "-":
            write_forest_dot(args.n, sys.stdout, max_height)
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                nodes = write_forest_dot(args.n, fh, max_height)
            if not args.json:
                print(f"wrote {nodes} nodes to {args.dot}")
            else:
                print(json.dumps({"n": args.n, "max_height": max_height, "count": str(nodes)}))
        return 0
    if args.list:
        total = counting.P(args.n, max_height)
        limit = guard_limit(LIST_LIMIT)
        if total > limit:
            raise ResourceGuardError(f"{total} patterns exceed the listing limit {limit}")
        items = list(enumerate(enumerate_patterns(args.n, max_height)))
        payload = [{"ordinal": i, "pattern": str(p), "height": p.height} for i, p in items]
        _emit(args, payload, "\n".join(f"{i}\t{p}\t{p.height}" for i, p in items))
        return 0
    count = count_patterns(args.n, max_height, args.threads)
    _emit(args, {"n": args.n, "max_height": max_height, "count": str(count)}, str(count))
    return 0


# -- valuations ---------------------------------------------------------------

def _split_coef(spec: str) -> tuple[str, Fraction]:
    head, sep, coef = spec.rpartition(":")
    if not sep:
        return spec, Fraction(1)
    try:
        return head, Fraction(coef)
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"bad coefficient in {spec!r}") from None


def _valuation_from_args(args) -> valuations.Valuation:
    nu = valuations.Valuation.zero(args.n)
    terms = 0
    for spec in args.chi or []:
        head, c = _split_coef(spec)
        try:
            k = int(head)
            nu = nu + c * valuations.chi_as_valuation(args.n, k)
        except ValueError as e:
            raise ArgumentError(f"--chi {spec}: {e}") from None
        terms += 1
    for flag, build in (("indicator", valuations.indicator), ("weight", valuations.weight_indicator)):
        for spec in getattr(args, flag) or []:
            head, c = _split_coef(spec)
            try:
                p = parse_pattern(head)
            except ValueError as e:
                raise ArgumentError(f"--{flag} {spec}: {e}") from None
            if p.n != args.n:
                raise ArgumentError(f"--{flag} {spec}: pattern has {p.n} variables, expected {args.n}")
            nu = nu + c * build(p)
            terms += 1
    if not terms:
        raise ArgumentError("give at least one --chi, --indicator or --weight term")
    return nu


def cmd_valuations(args) -> int:
    _positive("--n", args.n)
    n = args.n
    limit = args.max_patterns
    if args.action == "dims":
        v = counting.P(n, n + 1)
        i_perm = valuations.invariant_dimension(n, limit)
        payload = {"n": n, "v": str(v), "i_perm": str(i_perm), "c": str(n + 1)}
        text = f"dim V (all valuations):        {v}\ndim I_perm (permutation-fixed): {i_perm}\ndim C (span of chi_k):         {n + 1}"
        _emit(args, payload, text)
    elif args.action == "det":
        system = valuations.independence_matrix(n)
        det = valuations.determinant(system)
        payload = {
            "n": n,
            "matrix": [[_rational(x) for x in row] for row in system.matrix],
            "determinant": _rational(det),
        }
        _emit(args, payload, str(det))
    elif args.action == "invariant":
        ok = valuations.is_invariant(_valuation_from_args(args), limit)
        _emit(args, {"n": n, "invariant": ok}, "invariant" if ok else "not invariant")
    elif args.action == "span":
        coefs = valuations.in_span_of_chis(_valuation_from_args(args), limit)
        payload = {
            "n": n,
            "in_span": coefs is not None,
            "coefficients": None if coefs is None else [_rational(c) for c in coefs],
        }
        if coefs is None:
            text = "not in the span of chi_1..chi_%d" % (n + 1)
        else:
            text = " + ".join(f"({c})*chi_{k}" for k, c in enumerate(coefs, 1))
        _emit(args, payload, text)
    return 0


# -- oracle -------------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.action == "chi":
        f = parse(args.formula)
        _positive("--vars", args.vars)
        _positive("--k", args.k)
        try:
            n = characteristics.resolve_n(f, args.vars)
        except ValueError as e:
            raise ArgumentError(str(e)) from None
        brute = oracle.brute_chi(f, n, args.k)
        fast = characteristics.chi(f, n, args.k)
        payload = {
            "formula": to_string(f), "n": n, "k": args.k,
            "brute_chi": str(brute), "chi": str(fast), "agree": brute == fast,
        }
        _emit(args, payload, f"brute force: {brute}\npatterns:    {fast}\nagree: {_yn(brute == fast)}")
    else:
        _positive("--n", args.n)
        _positive("--k", args.k)
        brute = oracle.brute_class_count(args.n, args.k)
        p = counting.P(args.n, args.k)
        payload = {"n": args.n, "k": args.k, "classes": str(brute), "p": str(p), "agree": brute == p}
        _emit(args, payload, f"classes: {brute}\nP(n,k):  {p}\nagree: {_yn(brute == p)}")
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="report elapsed time")
    common.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="worker threads for counting (default: all cores)"
    )

    parser = _Parser(
        prog="godelchi",
        description="Generalised Euler characteristics of Godel logic formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("chi", cmd_chi, "chi_1..chi_{n+1} of a formula and tautology flags"),
        ("classify", cmd_classify, "one-line tautology verdict"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("formula")
        p.add_argument("--vars", type=int, help="number of variables n (default: largest index; may only increase it)")
        p.add_argument(
            "--k", type=int,
            help="also report chi_k and the (k+1)-valued verdict; k > n+1 acts as n+1",
        )
        p.set_defaults(func=fn)

    p = sub.add_parser("table", parents=[common], help="table of P(n,k) (or T(n,k) with --tree)")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--max-k", type=int, default=7)
    p.add_argument("--tree", action="store_true", help="print T(n,k) instead of P(n,k)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("patterns", parents=[common], help="count, list or draw the join-irreducible forest")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-height", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="count patterns (default)")
    mode.add_argument("--list", action="store_true", help="list patterns in enumeration order")
    mode.add_argument("--dot", metavar="PATH", help="write the forest as Graphviz DOT ('-' for stdout)")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("valuations", parents=[common], help="linear structure of the valuation space")
    p.add_argument("action", choices=["dims", "det", "invariant", "span"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi", action="append", metavar="K[:COEF]", help="add COEF * chi_K")
    p.add_argument("--indicator", action="append", metavar="PATTERN[:COEF]",
                   help="add COEF * the basis valuation that is 1 at PATTERN only, e.g. '{1,2}|[]|{}'")
    p.add_argument("--weight", action="append", metavar="PATTERN[:COEF]",
                   help="add COEF * the valuation with weight 1 at PATTERN")
    p.add_argument("--max-patterns", type=int, help="resource guard for dense work (default 18731)")
    p.set_defaults(func=cmd_valuations)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks (test evidence)")
    osub = p.add_subparsers(dest="action", required=True)
    q = osub.add_parser("chi", parents=[common])
    q.add_argument("formula")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--vars", type=int)
    q.set_defaults(func=cmd_oracle)
    q = osub.add_parser("classes", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.started = time.perf_counter()
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ResourceGuardError, oracle.OracleGuardError) as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as e:
        print(f"invalid argument: {e}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
