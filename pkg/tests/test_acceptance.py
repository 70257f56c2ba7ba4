"""End-to-end acceptance checks; each test records one PASS/FAIL summary line."""
from __future__ import annotations

import json
import subprocess
import sys
import time
from fractions import Fraction

import mpmath

from qeuler.algebra import ratq_eval
from qeuler.core import (
    addition_theorem_expand,
    classical_euler,
    euler_number,
    euler_number_series_oracle,
    q_limit_check,
)
from qeuler.verify import eq17_sides
from qeuler.zeta import thm21_check


def cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "qeuler", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def sweep(*argv):
    code, out = cli("sweep", *argv)
    return code, json.loads(out), out


def all_exact(body):
    return all(r["passed"] and r["deviation"] == "exact-zero" for r in body["rows"])


def test_1_thm22_grid(record):
    start = time.perf_counter()
    code, body, _ = sweep("thm22", "--n-max", "10", "--odd-max", "7")
    elapsed = time.perf_counter() - start
    pairs = {(r["params"]["a"], r["params"]["b"]) for r in body["rows"]}
    ok = code == 0 and all_exact(body) and pairs == {(a, b) for a in (1, 3, 5, 7) for b in (1, 3, 5, 7)}
    ok = ok and body["cases"] == 11 * 16 and elapsed < 300
    record(1, "THM22 exact zero, n<=10, odd (a,b)<=7", ok,
           f"{body['cases'] - body['failed']}/{body['cases']} exact-zero in {elapsed:.1f}s (limit 300s)")


def test_2_thm24_grid_with_intermediates(record):
    code, body, _ = sweep("thm24", "--n-max", "10", "--odd-max", "7", "--check-intermediates")
    ok = code == 0 and all_exact(body) and body["cases"] == 176
    ok = ok and all(r["params"]["check_intermediates"] for r in body["rows"])
    record(2, "THM24 exact zero incl. rearrangements", ok,
           f"{body['cases'] - body['failed']}/{body['cases']} exact-zero")


def test_3_prop23(record):
    code, body, _ = sweep("prop23", "--n-max", "12")
    ok = code == 0 and all_exact(body) and body["cases"] == 13
    record(3, "PROP23 exact zero, n<=12", ok, f"{body['cases'] - body['failed']}/{body['cases']} exact-zero")


def test_4_eq17(record):
    code, body, _ = sweep("eq17", "--n-max", "12")
    pairs = {(r["params"]["m"], r["params"]["n"]) for r in body["rows"]}
    ok = code == 0 and all_exact(body)
    ok = ok and pairs == {(m, n) for m in range(13) for n in range(13) if m + n <= 12}
    structural = all(
        eq17_sides(m, 0) == (addition_theorem_expand(m, "first"), addition_theorem_expand(m, "direct"))
        for m in range(13)
    )
    record(4, "EQ17 exact zero, m+n<=12; n=0 is the addition theorem", ok and structural,
           f"{body['cases'] - body['failed']}/{body['cases']} exact-zero, n=0 reduction {'ok' if structural else 'broken'}")


def test_5_interpolation(record):
    code, body, _ = sweep("eq5", "--n-max", "8", "--x-values", "1/4,1/2,3/4",
                          "--q-values", "3/10,1/2,7/10", "--precision-bits", "256", "--tol", "1e-30")
    with mpmath.workprec(256):
        limit = mpmath.mpf("2e-30")
        devs = [mpmath.mpf(r["params"]["zeta_value"]) - mpmath.mpf(r["params"]["poly_value"]) for r in body["rows"]]
        worst = max(abs(d) for d in devs)
        ok = code == 0 and body["cases"] == 81 and worst <= limit
    record(5, "EQ5 interpolation within 2e-30 at 256 bits", ok,
           f"{body['cases']} cases, max deviation {mpmath.nstr(worst, 3)}")


def test_6_thm21(record):
    lines, ok = [], True
    for s in ("1.5", "2.5"):
        r = thm21_check(s, 3, 5, Fraction(7, 10), Fraction(3, 10), "1e-30", 256)
        bound = r.param("certified_bound")
        ok = ok and r.passed and r.deviation <= bound <= mpmath.mpf("1e-25")
        lines.append(f"s={s}: |diff|={mpmath.nstr(r.deviation, 3)} bound={mpmath.nstr(bound, 3)}")
    record(6, "THM21 numeric at (3,5), x=7/10, q=3/10", ok, "; ".join(lines))


def test_7_oracle_equivalence(record):
    tol = mpmath.mpf("1e-30")
    worst = mpmath.mpf(0)
    with mpmath.workprec(256):
        for q0 in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
            for n in range(9):
                exact = ratq_eval(euler_number(n), q0)
                series = euler_number_series_oracle(n, q0, 0, tol, 256)
                worst = max(worst, abs(series - mpmath.mpf(exact.numerator) / exact.denominator))
        ok = worst <= 2 * tol
    record(7, "recurrence vs series oracle, n<=8", ok, f"27 points, max deviation {mpmath.nstr(worst, 3)}")


def test_8_classical_limit(record):
    classical = classical_euler(20)
    rows_ok = all(ratq_eval(euler_number(n), 1) == classical[n](0) for n in range(21))
    firsts = [classical[n](0) for n in (1, 2, 3)]
    ok = rows_ok and q_limit_check(20).passed and firsts == [Fraction(-1, 2), 0, Fraction(1, 4)]
    record(8, "q -> 1 limit equals classical E_n(0), n<=20", ok,
           "E_1, E_2, E_3 = " + ", ".join(str(v) for v in firsts))


def test_9_parity_probe(record):
    code, out = cli("verify", "thm22", "--n", "1", "--a", "2", "--b", "1", "--force")
    report = json.loads(out)
    ok = code == 1 and not report["passed"] and report["deviation"] == "nonzero"
    refused, _ = cli("verify", "thm22", "--n", "1", "--a", "2", "--b", "1")
    ok = ok and refused == 2
    record(9, "parity probe (a,b)=(2,1), n=1 is nonzero", ok,
           f"forced exit {code}, witness {report['witness']['term']}; unforced exit {refused}")


def test_10_determinism(record):
    runs = [("thm22", "--n-max", "6", "--odd-max", "7"), ("eq5", "--n-max", "4"), ("thm21",)]
    same = []
    for argv in runs:
        first = sweep(*argv)[2]
        second = sweep(*argv)[2]
        same.append(first == second)
    record(10, "sweep JSON byte-identical across runs", all(same),
           f"{sum(same)}/{len(same)} sweeps identical (thm22, eq5, thm21)")
