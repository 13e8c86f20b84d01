"""orderpoly command line.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
3 cap refusal.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import closed_forms as cf
from .config import DEFAULT_CAPS, Caps, load_config
from .dsl import DslError, evaluate
from .engine import crosscheck, ehr_polynomial, ehr_series, extension_stats
from .exact import EhrSeries, Polynomial, riordan_triangle, series_coefficient
from .poset import CapExceeded, InvalidPoset, PreconditionError
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _num(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _list(xs) -> str:
    return "[" + ", ".join(_num(x) for x in xs) + "]"


def _range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}; need 0 <= A <= B")
    return lo, hi


def _series_arg(text: str) -> EhrSeries:
    """``h0,h1,...:e`` -> (h0 + h1 x + ...) / (1-x)^e."""
    try:
        coeffs, _, exp = text.partition(":")
        return EhrSeries(Polynomial(int(c) for c in coeffs.split(",")), int(exp or 0))
    except ValueError:
        raise UsageError(f"bad series {text!r}; expected h0,h1,...:e") from None


def _caps(args) -> Caps:
    caps = DEFAULT_CAPS
    if args.config:
        try:
            caps = caps.with_overrides(**load_config(args.config))
        except (OSError, ValueError) as exc:
            raise UsageError(f"config: {exc}") from None
    return caps.with_overrides(
        max_elements=args.max_elements,
        max_oracle_elements=args.max_oracle_elements,
        max_oracle_n=args.max_oracle_n,
        workers=args.workers,
    )


# -- commands ---------------------------------------------------------------


def cmd_series(args, caps, out):
    s = ehr_series(evaluate(args.expr), caps)
    out.append(f"hstar = {_list(s.hstar.terms)}")
    out.append(f"denom_exp = {s.denom_exp}")
    out.append(f"coefficients = {_list(s.coefficients(args.terms))}")
    return EXIT_OK


def cmd_hstar(args, caps, out):
    out.append(_list(extension_stats(evaluate(args.expr), caps).by_descents))
    return EXIT_OK


def cmd_poly(args, caps, out):
    out.append(_list(ehr_polynomial(evaluate(args.expr), caps).terms))
    return EXIT_OK


def cmd_eval(args, caps, out):
    lo, hi = _range(args.n)
    s = ehr_series(evaluate(args.expr), caps)
    out.extend(f"{n} {series_coefficient(s, n)}" for n in range(lo, hi + 1))
    return EXIT_OK


def cmd_crosscheck(args, caps, out):
    report = crosscheck(evaluate(args.expr), args.nmax, caps)
    out.append(report.render())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_triangle(args, caps, out):
    rows = args.rows
    fam = args.family
    if fam == "riordan":
        if not (args.g and args.f):
            raise UsageError("riordan needs --g and --f")
        try:
            tri = riordan_triangle(_series_arg(args.g), _series_arg(args.f), rows)
        except ValueError as exc:
            raise UsageError(f"riordan: {exc}") from None
    elif fam == "eulerian2":
        tri = [list(cf.second_order_eulerian_row(k)) for k in range(1, rows + 1)]
    elif fam == "narayana":
        tri = [list(cf.narayana_hstar(k).terms) for k in range(1, rows + 1)]
    elif fam == "multiset-des":
        if args.k is None or args.k < 1:
            raise UsageError("multiset-des needs --k >= 1")
        tri = [list(cf.multiset_descent_poly((args.k,) * r).terms) for r in range(1, rows + 1)]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam!r}")
    out.extend(" ".join(_num(v) for v in row) for row in tri)
    return EXIT_OK


def cmd_verify(args, caps, out):
    try:
        report = run_suite(args.suite, args.fixtures, caps)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    out.append(report.render())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_parse(args, caps, out):
    out.append(evaluate(args.expr).dump())
    return EXIT_OK


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-elements", type=int, help="cap on poset size for enumeration")
    common.add_argument("--max-oracle-elements", type=int, help="cap on poset size for the brute-force oracle")
    common.add_argument("--max-oracle-n", type=int, help="cap on n for the brute-force oracle")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--config", help="key=value config file (flags win)")

    parser = argparse.ArgumentParser(prog="orderpoly", description="Ehrhart data of order polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="h*, denominator exponent and leading coefficients")
    p.add_argument("expr")
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=cmd_series)

    for name, func, text in [
        ("poly", cmd_poly, "Ehrhart polynomial coefficients, lowest degree first"),
        ("hstar", cmd_hstar, "h* vector"),
        ("parse", cmd_parse, "canonical poset dump"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("expr")
        p.set_defaults(func=func)

    p = sub.add_parser("eval", parents=[common], help="ehr(n) for n in a range")
    p.add_argument("expr")
    p.add_argument("--n", required=True, help="A..B")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("crosscheck", parents=[common], help="engine against brute-force lattice point count")
    p.add_argument("expr")
    p.add_argument("--nmax", type=int, default=5)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("triangle", parents=[common], help="print an integer triangle")
    p.add_argument("--family", required=True, choices=["riordan", "eulerian2", "narayana", "multiset-des"])
    p.add_argument("--rows", type=int, default=8)
    p.add_argument("--g", help="riordan g as h0,h1,...:e")
    p.add_argument("--f", help="riordan f as h0,h1,...:e")
    p.add_argument("--k", type=int, help="letter multiplicity for multiset-des")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", parents=[common], help="run a fixture verification suite")
    p.add_argument("--suite", default="all", help="one of: all, " + ", ".join(SUITES))
    p.add_argument("--fixtures", help="fixture directory (default: bundled)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        if getattr(args, "terms", 0) < 0 or getattr(args, "nmax", 0) < 0 or getattr(args, "rows", 0) < 0:
            raise UsageError("counts must be non-negative")
        code = args.func(args, _caps(args), out)
    except (DslError, UsageError, InvalidPoset, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    if out:
        print("\n".join(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
