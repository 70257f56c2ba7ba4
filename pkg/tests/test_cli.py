from __future__ import annotations

import json
from fractions import Fraction

import pytest

from qeuler.algebra import LaurentXY, PolyQ, RatQ
from qeuler.cli import CliConfig, main
from qeuler.core import euler_poly_symbolic
from qeuler.serialize import laurent_json, ratq_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_numbers_symbolic(capsys):
    code, out, _ = run(capsys, "numbers", "--n", "2")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["n"] for r in rows] == [0, 1, 2]
    assert rows[1] == {"n": 1, "num": ["0/1", "-1/1"], "den": ["1/1", "0/1", "1/1"]}
    # -q(1-q^2)/((1+q^2)(1+q^3)) after cancelling 1+q
    assert rows[2]["num"] == ["0/1", "-1/1", "1/1"]
    assert rows[2]["den"] == ["1/1", "-1/1", "2/1", "-1/1", "1/1"]


def test_numbers_zero(capsys):
    code, out, _ = run(capsys, "numbers", "--n", "0", "--format", "text")
    assert code == 0 and out.split() == ["0", "1"]


def test_numbers_values(capsys):
    code, out, _ = run(capsys, "numbers", "--n", "1", "--q", "1/2")
    assert [r["value"] for r in json.loads(out)["rows"]] == ["1/1", "-2/5"]


def test_numbers_cross_check_needs_unit_interval(capsys):
    code, _, err = run(capsys, "numbers", "--n", "1", "--q", "3/2", "--cross-check")
    assert code == 2 and "cross-check" in err


def test_numbers_csv(capsys):
    code, out, _ = run(capsys, "numbers", "--n", "1", "--q", "1/2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,num,den,value"
    assert lines[2].endswith(",-2/5")


def test_verify_thm22(capsys):
    code, out, _ = run(capsys, "verify", "thm22", "--n", "8", "--a", "3", "--b", "5")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True and report["deviation"] == "exact-zero"
    assert list(report) == ["identity", "mode", "passed", "deviation", "params", "witness"]


def test_verify_even_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "thm22", "--n", "1", "--a", "2", "--b", "1")
    assert code == 2 and out == "" and "odd" in err


def test_verify_even_forced_fails(capsys):
    code, out, _ = run(capsys, "verify", "thm22", "--n", "1", "--a", "2", "--b", "1", "--force")
    report = json.loads(out)
    assert code == 1 and report["deviation"] == "nonzero"
    assert len(report["witness"]["term"]) == 1


def test_verify_eq5(capsys):
    code, out, _ = run(capsys, "verify", "eq5", "--m", "3", "--x", "1/2", "--q", "1/2")
    report = json.loads(out)
    assert code == 0 and report["mode"] == "numeric"
    assert float(report["deviation"]) <= float(report["params"]["certified_bound"])


@pytest.mark.parametrize("argv", [
    ["verify", "thm21", "--s", "2.5", "--a", "3", "--b", "5", "--x", "7/10", "--q", "3/10"],
    ["verify", "thm24", "--n", "3", "--a", "3", "--b", "5", "--check-intermediates"],
    ["verify", "prop23", "--n", "4"],
    ["verify", "eq13", "--x", "1", "--y", "2", "--m", "3", "--u", "1/2", "--v", "1/3", "--q", "1/2"],
    ["verify", "eq17", "--m", "2", "--n", "3"],
    ["limit", "--n", "12"],
])
def test_verify_other_identities(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["passed"] is True


def test_missing_flag_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "thm22", "--n", "2", "--a", "3")
    assert code == 2 and "--b" in err


def test_unknown_identity_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm99", "--n", "1"])
    assert exc.value.code == 2


def test_bad_config():
    with pytest.raises(ValueError):
        CliConfig(precision_bits=32)
    with pytest.raises(ValueError):
        CliConfig(tol="-1e-3")


def test_low_precision_rejected(capsys):
    code, _, _ = run(capsys, "zeta", "--s", "2", "--x", "1", "--q", "1/2", "--precision-bits", "32")
    assert code == 2


def test_zeta_and_eval(capsys):
    code, out, _ = run(capsys, "zeta", "--s", "0", "--x", "1", "--q", "1/2")
    row = json.loads(out)["rows"][0]
    assert code == 0 and abs(float(row["value"]) - 1) < 1e-15
    code, out, _ = run(capsys, "eval", "--n", "1", "--q", "1/2", "--x", "1", "--cross-check")
    row = json.loads(out)["rows"][0]
    assert abs(float(row["value"]) - 0.8) < 1e-15 and abs(float(row["series"]) - 0.8) < 1e-15


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "--n", "1")
    rows = json.loads(out)["rows"]
    assert code == 0 and [(r["e_X"], r["e_Y"]) for r in rows] == [(0, 0), (1, 0)]


@pytest.mark.parametrize("argv", [
    ["sweep", "thm24", "--n-max", "6", "--odd-max", "5"],
    ["sweep", "prop23", "--n-max", "12"],
    ["sweep", "limit", "--n-max", "20"],
])
def test_sweep_examples(capsys, argv):
    code, out, _ = run(capsys, *argv)
    body = json.loads(out)
    assert code == 0 and body["passed"] and body["failed"] == 0
    assert body["cases"] == len(body["rows"])


def test_sweep_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "sweep", "thm22", "--n-max", "3", "--odd-max", "5")
    _, parallel, _ = run(capsys, "sweep", "thm22", "--n-max", "3", "--odd-max", "5", "--jobs", "2")
    assert serial == parallel


def test_sweep_empty_grid(capsys):
    code, _, err = run(capsys, "sweep", "thm22", "--odd-max", "0")
    assert code == 2 and "empty" in err
    code, _, _ = run(capsys, "sweep", "prop23", "--n-max", "-1")
    assert code == 2


def test_sweep_text_summary(capsys):
    code, out, _ = run(capsys, "sweep", "eq17", "--n-max", "3", "--format", "text")
    assert code == 0 and out.splitlines()[-1] == "PASS eq17: 10/10 cases passed"


# ----- encodings ----------------------------------------------------------

def test_rational_and_laurent_encodings_round_trip():
    q = PolyQ.gen()
    r = RatQ(2 * q, 2 + 2 * q)
    assert ratq_json(r) == {"num": ["0/1", "1/1"], "den": ["1/1", "1/1"]}
    p = euler_poly_symbolic(3)
    encoded = json.loads(json.dumps(laurent_json(p)))
    rebuilt = LaurentXY({
        (ex, ey): RatQ(PolyQ(Fraction(c) for c in num), PolyQ(Fraction(c) for c in den))
        for ex, ey, num, den in encoded
    })
    assert rebuilt == p
    assert [row[:2] for row in encoded] == sorted(row[:2] for row in encoded)
