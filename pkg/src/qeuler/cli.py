"""Command-line front end: ``qeuler <subcommand> ...``.

Exit codes: 0 when every check passed (or a table was printed), 1 when a
check failed, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath

from . import serialize as ser
from ._numeric import positive_tol, real_str
from .algebra import PoleError, as_rational, format_rational
from .core import (
    ARG_X,
    ARG_XY,
    ARG_Y,
    euler_number_series_oracle,
    euler_numbers,
    euler_poly_eval,
    euler_poly_symbolic,
    q_limit_check,
)
from .report import VerificationReport
from .sweep import SWEEPABLE, Grid, run_sweep, summarize
from .verify import verify_eq13, verify_eq17, verify_prop23, verify_thm22, verify_thm24
from .zeta import interpolation_check, thm21_check, zeta_eval

VERIFIABLE = ("thm21", "thm22", "thm24", "prop23", "eq5", "eq13", "eq17")


@dataclass(frozen=True)
class CliConfig:
    precision_bits: int = 256
    tol: str = "1e-30"
    output_format: str = "json"
    override_parity: bool = False

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("--precision-bits must be >= 64")
        with mpmath.workprec(self.precision_bits):
            positive_tol(self.tol)
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown format {self.output_format!r}")


class UsageError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _rational_list(text: str) -> tuple:
    return tuple(_rational(t) for t in text.split(","))


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _emit_reports(reports: List[VerificationReport], cfg: CliConfig, header: Optional[dict] = None) -> str:
    prec = cfg.precision_bits
    if cfg.output_format == "csv":
        return ser.reports_csv(reports, prec)
    if cfg.output_format == "text":
        lines = [ser.report_text(r, prec) for r in reports]
        if header is not None:
            lines.append(f"{'PASS' if header['passed'] else 'FAIL'} {header['identity']}: "
                         f"{header['cases'] - header['failed']}/{header['cases']} cases passed")
        return "\n".join(lines) + "\n"
    if header is None:
        return ser.dumps(ser.report_json(reports[0], prec))
    body = dict(header)
    body["rows"] = [ser.report_json(r, prec) for r in reports]
    return ser.dumps(body)


def _emit_table(title: dict, header: Sequence[str], rows: List[list], cfg: CliConfig) -> str:
    if cfg.output_format == "csv":
        return ser.rows_csv(header, rows)
    if cfg.output_format == "text":
        return "\n".join("  ".join(str(ser._flat(v)) for v in row) for row in rows) + "\n"
    body = dict(title)
    body["rows"] = [dict(zip(header, row)) for row in rows]
    return ser.dumps(body)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_numbers(args, cfg: CliConfig) -> int:
    _need(args, "n")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.cross_check and (args.q is None or not 0 < args.q < 1):
        raise UsageError("--cross-check needs --q in (0, 1)")
    table = euler_numbers(args.n, args.a)
    header = ["n", "num", "den"]
    if args.q is not None:
        header.append("value")
    if args.cross_check:
        header.append("series")
    rows = []
    for n, e in enumerate(table.entries):
        if cfg.output_format == "text":
            row = [n, str(e)]
        else:
            row = [n, ser.poly_json(e.num), ser.poly_json(e.den)]
        if args.q is not None:
            row.append(format_rational(e.eval(args.q)))
        if args.cross_check:
            q_sub = args.q ** args.a
            row.append(real_str(euler_number_series_oracle(n, q_sub, 0, cfg.tol, cfg.precision_bits),
                                cfg.precision_bits))
        rows.append(row)
    if cfg.output_format == "text":
        header = header[:1] + ["E"] + header[3:]
    title = {"table": "q-euler-numbers", "base_power": args.a}
    sys.stdout.write(_emit_table(title, header, rows, cfg))
    return 0


_ARGS = {"x": ARG_X, "y": ARG_Y, "xy": ARG_XY}


def cmd_poly(args, cfg: CliConfig) -> int:
    _need(args, "n")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    p = euler_poly_symbolic(args.n, args.a, _ARGS[args.arg])
    if cfg.output_format == "text":
        sys.stdout.write(repr(p) + "\n")
        return 0
    rows = [[ex, ey, ser.poly_json(c.num), ser.poly_json(c.den)] for (ex, ey), c in p.items()]
    title = {"poly": "q-euler", "n": args.n, "base_power": args.a, "arg": args.arg}
    sys.stdout.write(_emit_table(title, ["e_X", "e_Y", "num", "den"], rows, cfg))
    return 0


def cmd_eval(args, cfg: CliConfig) -> int:
    _need(args, "n", "q", "x")
    prec = cfg.precision_bits
    value = euler_poly_eval(args.n, args.q, args.x, prec)
    header = ["n", "q", "x", "value"]
    row = [args.n, format_rational(args.q), format_rational(args.x), real_str(value, prec)]
    if args.cross_check:
        if args.x < 0:
            raise UsageError("--cross-check needs --x >= 0")
        header.append("series")
        row.append(real_str(euler_number_series_oracle(args.n, args.q, args.x, cfg.tol, prec), prec))
    sys.stdout.write(_emit_table({"eval": "q-euler-polynomial"}, header, [row], cfg))
    return 0


def cmd_zeta(args, cfg: CliConfig) -> int:
    _need(args, "s", "x", "q")
    prec = cfg.precision_bits
    z = zeta_eval(args.s, args.x, args.q, args.a, cfg.tol, prec)
    header = ["s", "x", "q", "base_power", "value", "tail_bound", "terms_used"]
    row = [real_str(z.s, prec), format_rational(z.x), format_rational(z.q0), z.base_power,
           real_str(z.value, prec), real_str(z.tail_bound, prec), z.terms_used]
    sys.stdout.write(_emit_table({"zeta": "q-euler-zeta"}, header, [row], cfg))
    return 0


def cmd_limit(args, cfg: CliConfig) -> int:
    _need(args, "n")
    report = q_limit_check(args.n)
    sys.stdout.write(_emit_reports([report], cfg))
    return 0 if report.passed else 1


def _run_verify(args, cfg: CliConfig) -> VerificationReport:
    ident = args.identity
    force = cfg.override_parity
    if ident == "thm22":
        _need(args, "n", "a", "b")
        return verify_thm22(args.n, args.a, args.b, allow_even=force)
    if ident == "thm24":
        _need(args, "n", "a", "b")
        return verify_thm24(args.n, args.a, args.b, args.check_intermediates, allow_even=force)
    if ident == "thm21":
        _need(args, "s", "a", "b", "x", "q")
        return thm21_check(args.s, args.a, args.b, args.x, args.q, cfg.tol, cfg.precision_bits,
                           allow_even=force)
    if ident == "prop23":
        _need(args, "n")
        return verify_prop23(args.n)
    if ident == "eq5":
        _need(args, "m", "x", "q")
        return interpolation_check(args.m, args.x, args.q, cfg.tol, cfg.precision_bits)
    if ident == "eq13":
        _need(args, "x", "y", "m", "u", "v", "q")
        return verify_eq13(args.x, args.y, args.m, args.u, args.v, args.q)
    if ident == "eq17":
        _need(args, "m", "n")
        return verify_eq17(args.m, args.n)
    raise UsageError(f"unknown identity {ident!r}")


def cmd_verify(args, cfg: CliConfig) -> int:
    report = _run_verify(args, cfg)
    sys.stdout.write(_emit_reports([report], cfg))
    return 0 if report.passed else 1


def cmd_sweep(args, cfg: CliConfig) -> int:
    kw = {"tol": cfg.tol, "prec": cfg.precision_bits, "check_intermediates": args.check_intermediates}
    if args.n_max is not None:
        kw["n_max"] = args.n_max
    if args.odd_max is not None:
        kw["odd_max"] = args.odd_max
    if args.s_values is not None:
        kw["s_values"] = tuple(args.s_values.split(","))
    if args.x_values is not None:
        kw["x_values"] = args.x_values
    if args.q_values is not None:
        kw["q_values"] = args.q_values
    grid = Grid(**kw)
    reports = run_sweep(args.identity, grid, jobs=args.jobs)
    header = summarize(args.identity, reports)
    header["grid"] = {"n_max": grid.n_max, "odd_max": grid.odd_max}
    sys.stdout.write(_emit_reports(reports, cfg, header))
    return 0 if header["passed"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--tol", default="1e-30", help="certified tolerance for numeric checks")
    common.add_argument("--precision-bits", type=int, default=256)
    common.add_argument("--force", action="store_true", help="allow even a or b (expected to fail)")
    common.add_argument("--check-intermediates", action="store_true")

    p = argparse.ArgumentParser(prog="qeuler", description="Exact q-Euler numbers, polynomials and symmetry checks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("numbers", parents=[common], help="table of q-Euler numbers")
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int, default=1, help="base power: use q^a")
    sp.add_argument("--q", type=_rational, help="also print exact values at this q")
    sp.add_argument("--cross-check", action="store_true", help="add the truncated-series value (q in (0,1))")
    sp.set_defaults(func=cmd_numbers)

    sp = sub.add_parser("poly", parents=[common], help="q-Euler polynomial as a Laurent polynomial")
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int, default=1)
    sp.add_argument("--arg", choices=tuple(_ARGS), default="x")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("eval", parents=[common], help="evaluate E_{n,q}(x) numerically")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=_rational)
    sp.add_argument("--x", type=_rational)
    sp.add_argument("--cross-check", action="store_true")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("zeta", parents=[common], help="certified q-Euler zeta value")
    sp.add_argument("--s")
    sp.add_argument("--x", type=_rational)
    sp.add_argument("--q", type=_rational)
    sp.add_argument("--a", type=int, default=1)
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("verify", parents=[common], help="check one identity")
    sp.add_argument("identity", choices=VERIFIABLE)
    for flag in ("--n", "--m", "--a", "--b"):
        sp.add_argument(flag, type=int)
    sp.add_argument("--s")
    for flag in ("--x", "--y", "--q", "--u", "--v"):
        sp.add_argument(flag, type=_rational)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", parents=[common], help="check one identity over a grid")
    sp.add_argument("identity", choices=SWEEPABLE)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--odd-max", type=int)
    sp.add_argument("--s-values", help="comma-separated real s values (thm21)")
    sp.add_argument("--x-values", type=_rational_list)
    sp.add_argument("--q-values", type=_rational_list)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("limit", parents=[common], help="q -> 1 limit against classical Euler numbers")
    sp.add_argument("--n", type=int)
    sp.set_defaults(func=cmd_limit)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(args.precision_bits, args.tol, args.format, args.force)
        return args.func(args, cfg)
    except (ValueError, PoleError, TypeError) as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
