"""Lossless JSON/CSV encodings for rationals, polynomials, Laurent polynomials and reports.

Rationals are ``"p/q"`` strings, polynomials ascending coefficient arrays,
LaurentXY values sorted ``[e_X, e_Y, num, den]`` tuples (monic denominators),
reals fixed scientific notation with digits tied to the working precision.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, List

import mpmath

from ._numeric import DEFAULT_PREC, real_str
from .algebra import LaurentXY, PolyQ, RatQ, format_rational
from .report import VerificationReport


def poly_json(p: PolyQ) -> List[str]:
    return [format_rational(c) for c in p.coeffs]


def ratq_json(r: RatQ) -> dict:
    return {"num": poly_json(r.num), "den": poly_json(r.den)}


def laurent_json(p: LaurentXY) -> list:
    return [[ex, ey, poly_json(c.num), poly_json(c.den)] for (ex, ey), c in p.items()]


def to_jsonable(value: Any, prec: int = DEFAULT_PREC) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, mpmath.mpf):
        return real_str(value, prec)
    if isinstance(value, PolyQ):
        return poly_json(value)
    if isinstance(value, RatQ):
        return ratq_json(value)
    if isinstance(value, LaurentXY):
        return laurent_json(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, prec) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, prec) for v in value]
    if isinstance(value, float):
        return real_str(mpmath.mpf(value), prec)
    raise TypeError(f"no JSON encoding for {type(value).__name__}")


def report_json(r: VerificationReport, prec: int = DEFAULT_PREC) -> dict:
    return {
        "identity": r.identity_id,
        "mode": r.mode,
        "passed": r.passed,
        "deviation": to_jsonable(r.deviation, prec),
        "params": {k: to_jsonable(v, prec) for k, v in r.params},
        "witness": to_jsonable(r.witness, prec),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


REPORT_CSV_HEADER = ("identity", "mode", "passed", "deviation", "params", "witness")


def _flat(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def reports_csv(reports: Iterable[VerificationReport], prec: int = DEFAULT_PREC) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_CSV_HEADER)
    for r in reports:
        d = report_json(r, prec)
        params = ";".join(f"{k}={_flat(v)}" for k, v in d["params"].items())
        witness = "" if d["witness"] is None else _flat(d["witness"])
        w.writerow([d["identity"], d["mode"], str(d["passed"]).lower(),
                    _flat(d["deviation"]), params, witness])
    return buf.getvalue()


def rows_csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for row in rows:
        w.writerow([_flat(v) for v in row])
    return buf.getvalue()


def report_text(r: VerificationReport, prec: int = DEFAULT_PREC) -> str:
    d = report_json(r, prec)
    status = "PASS" if r.passed else "FAIL"
    params = " ".join(f"{k}={_flat(v)}" for k, v in d["params"].items())
    line = f"{status} {r.identity_id} [{r.mode}] {params} deviation={_flat(d['deviation'])}"
    if d["witness"] is not None:
        line += f" witness={_flat(d['witness'])}"
    return line
