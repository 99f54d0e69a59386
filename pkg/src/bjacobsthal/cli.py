"""Command-line front end.

Exit codes: 0 success / all identities hold, 1 some identity failed,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .bihyperbolic import Bihyperbolic
from .genfunc import genfunc_components, series_expand
from .jsonio import encode
from .matrixgen import check_column_relation, check_matrix_identity, mat_pow, qj_matrix
from .polyring import DomainError, Polynomial, RationalFunction, poly_eval
from .sequences import SeqParams, engine_for, jacobsthal_ext
from .suite import FAMILIES, SuiteGrid, abc_cube, run_suite, summarize

OUTPUT_DIR_ENV = "BJACOBSTHAL_OUTPUT_DIR"

_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")

EVAL_OBJECTS = ("J", "BJ", "Z", "T", "theta", "partial_sum", "partial_sum_scalar")
# objects whose closed form divides by 3(x - 1)
_NEEDS_X_NE_1 = {"partial_sum", "partial_sum_scalar"}


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """Exact ``p`` or ``p/q``; decimals and floats are rejected."""
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected an exact rational 'p/q', got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _params(args) -> SeqParams:
    try:
        return SeqParams(*args.abc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _guard_x(x0: Fraction, divides_by_x_minus_1: bool) -> None:
    if divides_by_x_minus_1 and x0 == 1:
        raise DomainError("x = 1 is excluded: the closed form divides by 3(x - 1)")
    if x0 * x0 + x0 + 1 == 0:
        raise DomainError("x is a root of x^2 + x + 1")


def _at(value, x0):
    """Evaluate a scalar, polynomial or bihyperbolic value at ``x0``."""
    if isinstance(value, Bihyperbolic):
        return value.map(lambda c: _at(c, x0))
    if isinstance(value, RationalFunction):
        return value.evaluate(x0)
    if isinstance(value, Polynomial):
        return poly_eval(value, Fraction(x0))
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    path = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_seq(args) -> int:
    params = _params(args)
    lo, hi = args.range
    if lo > hi:
        raise UsageError(f"empty range: {lo} > {hi}")
    e = engine_for(params)
    rows = []
    for n in range(lo, hi + 1):
        value = e.bj(n)
        if args.x is not None:
            _guard_x(args.x, False)
            value = _at(value, args.x)
        rows.append((n, value))
    if args.format == "csv":
        _emit(_seq_csv(rows, args.x is not None), args.out)
    else:
        _emit(_dumps([{"n": n, "components": encode(v)} for n, v in rows]), args.out)
    return 0


def _seq_csv(rows, evaluated: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if evaluated:
        w.writerow(["n", "w", "j1", "j2", "j3"])
        for n, v in rows:
            w.writerow([n, *(str(c) for c in v.components)])
        return buf.getvalue()
    width = max(len(c.num.coeffs) for _, v in rows for c in v.components) or 1
    w.writerow(["n", "component", "den", *(f"c{k}" for k in range(width))])
    for n, v in rows:
        for name, comp in zip(("w", "j1", "j2", "j3"), v.components):
            cs = [str(c) for c in comp.num.coeffs]
            w.writerow([n, name, str(comp.den), *cs, *([0] * (width - len(cs)))])
    return buf.getvalue()


def _grid_from_args(args) -> SuiteGrid:
    only = frozenset(args.only) if args.only else None
    if args.abc is not None:
        abc = (_params(args),)
    else:
        abc = abc_cube(args.abc_max)
    kw = dict(only=only, printed_denominator=args.printed_denominator, abc=abc)
    if args.abc is not None:
        kw.update(genfunc_abc=abc, matrix_abc=abc)
    n = args.n
    if n is not None:
        single = (n,)
        kw.update(
            seq_n=single, lemma_n=single, triple_n=single, vajda_n=single, catalan_n=single,
            cassini_n=single, docagne_n=single, sum_n=single, matrix_n=single,
        )
    if args.p is not None:
        kw.update(vajda_p=(args.p,), catalan_p=(args.p,))
    if args.q is not None:
        kw["vajda_q"] = (args.q,)
    if args.m is not None:
        kw["docagne_m"] = (args.m,)
    if args.N is not None:
        kw["genfunc_N"] = (args.N,)
    return SuiteGrid(**kw)


def cmd_verify(args) -> int:
    grid = _grid_from_args(args)
    reports = run_suite(grid, workers=args.workers, keep_sides=args.full)
    out = {"summary": summarize(reports)}
    if args.full:
        out["reports"] = [r.to_json() for r in reports]
    _emit(_dumps(out), args.out)
    return 0 if out["summary"]["failed"] == 0 else 1


def cmd_series(args) -> int:
    params = _params(args)
    if args.N < 0:
        raise UsageError("--N must be >= 0")
    num, den = genfunc_components(params, printed=args.printed_denominator)
    coeffs = list(series_expand(num, den, args.N))
    if args.x is not None:
        _guard_x(args.x, False)
        coeffs = [_at(c, args.x) for c in coeffs]
    _emit(_dumps(encode(coeffs)), args.out)
    return 0


def cmd_matrix(args) -> int:
    params = _params(args)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    power = mat_pow(qj_matrix(), args.n)
    if args.x is not None:
        power = power.map(lambda c: _at(c, args.x))
    col = check_column_relation(args.n, params) if args.n >= 1 else None
    mat = check_matrix_identity(args.n, params)
    out = {
        "n": args.n,
        "params": params.as_dict(),
        "Q_pow": power.to_json(),
        "column_relation": col.to_json(sides=False) if col else None,
        "matrix_identity": mat.to_json(sides=False),
    }
    _emit(_dumps(out), args.out)
    ok = mat.equal and (col is None or col.equal)
    return 0 if ok else 1


def _eval_object(name: str, n: int, params: SeqParams):
    e = engine_for(params)
    x = RationalFunction.x()
    if name == "J":
        return jacobsthal_ext(n)
    if name == "BJ":
        return e.bj(n)
    if name == "Z":
        return e.z(n)
    if name == "T":
        return e.cal_T(n)
    if name == "theta":
        return e.theta_rf
    if name == "partial_sum_scalar":
        return (jacobsthal_ext(n + 2) - (x - 2) * jacobsthal_ext(n + 1) + x * jacobsthal_ext(n) - 1) / (3 * (x - 1))
    if name == "partial_sum":
        numer = (
            e.bj(0).scale(2 * x - 3) + e.bj(1).scale(x - 2) - e.bj(2)
            + e.bj(n + 2) - e.bj(n + 1).scale(x - 2) + e.bj(n).scale(x)
        )
        return numer / (3 * (x - 1))
    raise UsageError(f"unknown object {name!r}")


def cmd_eval(args) -> int:
    params = _params(args)
    _guard_x(args.x, args.object in _NEEDS_X_NE_1)
    if args.object in ("partial_sum", "partial_sum_scalar") and args.n < 0:
        raise UsageError("partial sums need --n >= 0")
    if args.object == "T" and args.n < 1:
        raise UsageError("T needs --n >= 1")
    value = _at(_eval_object(args.object, args.n, params), args.x)
    _emit(_dumps({"object": args.object, "n": args.n, "x": encode(args.x), "params": params.as_dict(),
                  "value": encode(value)}), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bjacobsthal",
        description="Generalized bihyperbolic third-order Jacobsthal polynomials with exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, abc_default=(1, 2, 3)):
        p.add_argument("--abc", nargs=3, type=int, metavar=("A", "B", "C"), default=abc_default,
                       help="shifts a, b, c >= 1 (default 1 2 3)")
        p.add_argument("--out", help=f"write to this file (relative paths resolve under ${OUTPUT_DIR_ENV})")

    p = sub.add_parser("seq", help="print BJ(n) for a range of n")
    common(p)
    p.add_argument("--range", nargs=2, type=int, metavar=("NMIN", "NMAX"), default=(0, 10))
    p.add_argument("--x", type=parse_rational, help="evaluate at this exact rational")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run the identity suite")
    common(p, abc_default=None)
    p.add_argument("--only", nargs="+", choices=FAMILIES, help="restrict to these identity families")
    p.add_argument("--abc-max", type=int, default=4, help="use every (a,b,c) in [1,K]^3 when --abc is absent")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int, help="generating-function truncation order")
    p.add_argument("--printed-denominator", action="store_true",
                   help="use the 1-(x-1)t-(x-1)t^3-xt^3 denominator (expected to fail)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--full", action="store_true", help="include every report with both sides")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="expand the generating function")
    common(p)
    p.add_argument("--N", type=int, default=10)
    p.add_argument("--x", type=parse_rational)
    p.add_argument("--printed-denominator", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("matrix", help="companion-matrix power and matrix identities")
    common(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--x", type=parse_rational)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("eval", help="evaluate one object exactly at a rational x")
    common(p)
    p.add_argument("--object", choices=EVAL_OBJECTS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=parse_rational, required=True)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"bjacobsthal {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
