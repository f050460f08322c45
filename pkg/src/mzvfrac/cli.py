"""Command-line interface.

Exit codes: 0 success / verified, 1 mathematical mismatch, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .closed_form import closed_form_product, euler_decomposition
from .errors import MzvFracError, ParseError
from .expsum import eval_at_zero, integral_representation
from .nested_sums import check_summed_identity
from .rational_eval import eval_fraction, verify_identity
from .render import FORMATS, render_lincomb
from .selftest import SUITES, run_suites
from .shuffle import shuffle_product
from .words import FracTerm, parse_term


def _print_parse_error(err: ParseError):
    print("error: %s" % err.message, file=sys.stderr)
    print(err.caret_diagnostic(), file=sys.stderr)


def _parse_rates(text):
    """Parse the ``s1,...,sk;b1,...,bk`` literal with positive rational rates."""
    semi = text.find(";")
    if semi < 0:
        raise ParseError("expected ';' between exponents and rates", text, len(text))
    exponents = []
    pos = 0
    for chunk in text[:semi].split(","):
        token = chunk.strip()
        offset = pos + len(chunk) - len(chunk.lstrip())
        if not token.isdigit() or int(token) < 1:
            raise ParseError("expected a positive integer", text, offset)
        exponents.append(int(token))
        pos += len(chunk) + 1
    rates = []
    pos = semi + 1
    for chunk in text[semi + 1 :].split(","):
        token = chunk.strip()
        offset = pos + len(chunk) - len(chunk.lstrip())
        try:
            value = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise ParseError("expected a rational number", text, offset) from None
        if value <= 0:
            raise ParseError("rates must be positive", text, offset)
        rates.append(value)
        pos += len(chunk) + 1
    if len(exponents) != len(rates):
        raise ParseError(
            "got %d exponents but %d rates" % (len(exponents), len(rates)),
            text,
            semi + 1,
        )
    return tuple(exponents), tuple(rates)


def _cmd_shuffle(args) -> int:
    p = parse_term(args.p)
    q = parse_term(args.q)
    if args.method in ("recursive", "both"):
        recursive = shuffle_product(p, q)
    if args.method in ("closed", "both"):
        closed = closed_form_product(p, q)
    if args.method == "recursive":
        print(render_lincomb(recursive, args.format))
        return 0
    if args.method == "closed":
        print(render_lincomb(closed, args.format))
        return 0
    print("recursive: %s" % render_lincomb(recursive, args.format))
    print("closed:    %s" % render_lincomb(closed, args.format))
    if recursive == closed:
        print("MATCH")
        return 0
    print("MISMATCH")
    return 1


def _cmd_verify(args) -> int:
    p = parse_term(args.p)
    q = parse_term(args.q)
    rhs = closed_form_product(p, q)
    verdict = verify_identity(p, q, rhs, samples=args.samples, seed=args.seed)
    if verdict.verified:
        print("Verified (%d samples, seed %d)" % (args.samples, args.seed))
        return 0
    print("Counterexample:")
    for name, value in sorted(verdict.counterexample.items()):
        print("  %s = %s" % (name, value))
    return 1


def _cmd_euler(args) -> int:
    if args.i < 1 or args.j < 1:
        print("error: exponents must be >= 1", file=sys.stderr)
        return 2
    expansion = euler_decomposition(args.i, args.j)
    print(render_lincomb(expansion, args.format))
    if args.i < 2 or args.j < 2:
        print("numeric check skipped: divergent")
        return 0
    check = check_summed_identity(
        FracTerm((args.i,), ("m",)),
        FracTerm((args.j,), ("n",)),
        expansion,
        cutoff=args.cutoff,
        tol=args.tol,
    )
    print(
        "numeric check: |%.10f - %.10f| = %.3e %s %g at cutoff %d: %s"
        % (
            check.lhs,
            check.rhs,
            check.gap,
            "<=" if check.passed else ">",
            args.tol,
            args.cutoff,
            "PASS" if check.passed else "FAIL",
        )
    )
    return 0 if check.passed else 1


def _cmd_integral_check(args) -> int:
    exponents, rates = _parse_rates(args.literal)
    lhs = eval_at_zero(integral_representation(exponents, rates))
    names = tuple("b%d" % i for i in range(1, len(rates) + 1))
    rhs = eval_fraction(FracTerm(exponents, names), dict(zip(names, rates)))
    print("integral value %s, fraction value %s" % (lhs, rhs))
    if lhs == rhs:
        print("OK")
        return 0
    print("MISMATCH")
    return 1


def _cmd_selftest(args) -> int:
    names = args.suite if args.suite else None
    try:
        results = run_suites(names)
    except KeyError as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return 2
    all_passed = True
    for r in results:
        all_passed = all_passed and r.passed
        if args.json:
            print(
                json.dumps(
                    {
                        "name": r.name,
                        "status": "pass" if r.passed else "fail",
                        "duration": round(r.duration, 3),
                        "detail": r.detail,
                    },
                    separators=(",", ":"),
                )
            )
        else:
            print(
                "%-20s %s (%.2fs) %s"
                % (r.name, "pass" if r.passed else "FAIL", r.duration, r.detail)
            )
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvfrac",
        description="Exact shuffle products of MZV fractions, with verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_shuffle = sub.add_parser(
        "shuffle", help="expand a product of two terms, e.g. shuffle '2;m' '2;n'"
    )
    p_shuffle.add_argument("p", help="left term literal, e.g. '2,1;u,v'")
    p_shuffle.add_argument("q", help="right term literal")
    p_shuffle.add_argument(
        "--method", choices=("recursive", "closed", "both"), default="both"
    )
    p_shuffle.add_argument("--format", choices=FORMATS, default="text")
    p_shuffle.set_defaults(fn=_cmd_shuffle)

    p_verify = sub.add_parser(
        "verify", help="check a product expansion at random rational points"
    )
    p_verify.add_argument("p")
    p_verify.add_argument("q")
    p_verify.add_argument("--samples", type=int, default=25)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(fn=_cmd_verify)

    p_euler = sub.add_parser(
        "euler", help="decompose 1/m^i * 1/n^j and check the summed identity"
    )
    p_euler.add_argument("i", type=int)
    p_euler.add_argument("j", type=int)
    p_euler.add_argument("--cutoff", type=int, default=10000)
    p_euler.add_argument("--tol", type=float, default=1e-3)
    p_euler.add_argument("--format", choices=FORMATS, default="text")
    p_euler.set_defaults(fn=_cmd_euler)

    p_integral = sub.add_parser(
        "integral-check",
        help="compare the iterated integral against the fraction value, e.g. '1,1;1,2'",
    )
    p_integral.add_argument("literal", help="exponents;rates with positive rational rates")
    p_integral.set_defaults(fn=_cmd_integral_check)

    p_selftest = sub.add_parser("selftest", help="run the built-in verification suites")
    p_selftest.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="run only the named suite (repeatable)",
    )
    p_selftest.add_argument("--json", action="store_true", help="one JSON object per suite")
    p_selftest.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as err:
        _print_parse_error(err)
        return 2
    except MzvFracError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
