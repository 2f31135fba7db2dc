"""Command-line interface.

Subcommands: eval, compare, difftable, integrate, coeffs, expand.  Every
subcommand accepts --depth (working truncation depth, default from the
OMEGA_DEPTH environment variable or 16) and --json.

Exit codes: 0 success, 2 expression syntax error, 3 mathematical domain
error, 4 precision exhausted or indistinguishable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .coefficients import k_coeff, x_coeff
from .errors import ExprSyntaxError, MathDomainError, OmegaError, PrecisionError
from .expressions import evaluate, parse
from .integers import R1Point
from .integration import PolynomialFn, discrete_integral, riemann
from .lifting import D_to_d_table, d_to_D_table
from .rationals import format_rational, format_rational_json
from .series import DEFAULT_DEPTH, expand_rational


def _env_depth() -> int:
    raw = os.environ.get("OMEGA_DEPTH")
    if raw is None:
        return DEFAULT_DEPTH
    try:
        value = int(raw)
    except ValueError:
        raise MathDomainError(f"OMEGA_DEPTH must be an integer, got {raw!r}")
    if value < 0:
        raise MathDomainError("OMEGA_DEPTH must be non-negative")
    return value


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _coeff_list(text: str):
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a coefficient list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--depth",
        type=int,
        default=None,
        help="working truncation depth (default: OMEGA_DEPTH or 16)",
    )
    common.add_argument(
        "--json", action="store_true", help="emit JSON instead of text"
    )

    parser = argparse.ArgumentParser(
        prog="omega",
        description="Exact arithmetic on series in the infinite unit S "
        "and the infinitesimal o = 1/S.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval", parents=[common], help="evaluate an expression"
    )
    p_eval.add_argument("expression")

    p_cmp = sub.add_parser(
        "compare", parents=[common], help="compare two expressions"
    )
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")

    p_table = sub.add_parser(
        "difftable",
        parents=[common],
        help="conversion table between the two differential families",
    )
    p_table.add_argument(
        "--dir",
        dest="direction",
        choices=("d_to_D", "D_to_d"),
        default="d_to_D",
    )
    p_table.add_argument("--max", dest="max_order", type=int, default=4)

    p_int = sub.add_parser(
        "integrate",
        parents=[common],
        help="discrete integral of a polynomial up to t + k*o",
    )
    p_int.add_argument(
        "--poly",
        type=_coeff_list,
        required=True,
        help="comma-separated coefficients, constant first",
    )
    p_int.add_argument("--t", type=_rational_arg, required=True)
    p_int.add_argument("--k", type=int, default=0)
    p_int.add_argument("--g0", type=_rational_arg, default=Fraction(0))

    p_coeffs = sub.add_parser(
        "coeffs",
        parents=[common],
        help="exact coefficient families (x: alternating sums, k: symmetric products)",
    )
    p_coeffs.add_argument("--family", choices=("x", "k"), default="x")
    p_coeffs.add_argument("--max", dest="max_order", type=int, default=6)

    p_expand = sub.add_parser(
        "expand",
        parents=[common],
        help="expand a quotient of polynomials in o into a series",
    )
    p_expand.add_argument("--num", type=_coeff_list, required=True)
    p_expand.add_argument("--den", type=_coeff_list, required=True)

    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_eval(args, depth: int) -> int:
    value = evaluate(parse(args.expression), depth)
    _emit(args, value.to_json(), str(value))
    return 0


def _cmd_compare(args, depth: int) -> int:
    left = evaluate(parse(args.left), depth)
    right = evaluate(parse(args.right), depth)
    relation = left.compare(right)
    _emit(
        args,
        {"kind": "comparison", "result": relation.symbol},
        relation.symbol,
    )
    return 0


def _cmd_difftable(args, depth: int) -> int:
    if args.max_order < 1:
        raise MathDomainError("--max must be at least 1")
    build = d_to_D_table if args.direction == "d_to_D" else D_to_d_table
    table = build(args.max_order)
    if args.json:
        print(json.dumps(table.to_json()))
        return 0
    prefix = "p" if args.direction == "d_to_D" else "n"
    for order in range(1, args.max_order + 1):
        row = ", ".join(format_rational(c) for c in table.row(order))
        print(f"{prefix}={order}: {row}")
    return 0


def _cmd_integrate(args, depth: int) -> int:
    f = PolynomialFn(args.poly)
    upper = R1Point(args.t, args.k)
    value = discrete_integral(f, upper, args.g0)
    standard = value.standard_part()
    exact = args.g0 + riemann(f, args.t)
    if standard != exact:
        print("internal error: standard part disagrees with the exact integral",
              file=sys.stderr)
        return 1
    payload = {
        "kind": "integral",
        "omega": value.to_json(),
        "standard": format_rational_json(standard),
        "riemann": format_rational_json(exact),
    }
    text = (
        f"omega: {value}\n"
        f"standard: {format_rational(standard)}\n"
        f"riemann: {format_rational(exact)}"
    )
    _emit(args, payload, text)
    return 0


def _cmd_coeffs(args, depth: int) -> int:
    if args.max_order < 0:
        raise MathDomainError("--max must be non-negative")
    top = args.max_order
    if args.family == "x":
        rows = [[x_coeff(p, n) for n in range(top + 1)] for p in range(top + 1)]
        label = "p"
    else:
        rows = [[k_coeff(m, j) for j in range(m + 1)] for m in range(top + 1)]
        label = "m"
    if args.json:
        print(
            json.dumps(
                {"kind": "coeff_family", "family": args.family,
                 "max": top, "rows": rows}
            )
        )
        return 0
    for index, row in enumerate(rows):
        print(f"{label}={index}: " + ", ".join(str(c) for c in row))
    return 0


def _cmd_expand(args, depth: int) -> int:
    value = expand_rational(args.num, args.den, depth)
    _emit(args, value.to_json(), str(value))
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "compare": _cmd_compare,
    "difftable": _cmd_difftable,
    "integrate": _cmd_integrate,
    "coeffs": _cmd_coeffs,
    "expand": _cmd_expand,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        depth = args.depth if args.depth is not None else _env_depth()
        if depth < 0:
            raise MathDomainError("--depth must be non-negative")
        return _COMMANDS[args.command](args, depth)
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OmegaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
