"""Run every identity sweep at its default grid and write one JSON file per identity.

    python3 scripts/run_sweeps.py --out results/ --jobs 4
"""
from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from qeuler.serialize import dumps, report_json
from qeuler.sweep import SWEEPABLE, Grid, run_sweep, summarize

# Grid bounds per identity; everything else uses the Grid defaults.
BOUNDS = {
    "thm22": {"n_max": 10},
    "thm24": {"n_max": 10, "check_intermediates": True},
    "prop23": {"n_max": 12},
    "eq17": {"n_max": 12},
    "eq5": {"n_max": 8},
    "eq13": {"n_max": 6},
    "limit": {"n_max": 20},
    "thm21": {},
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", choices=SWEEPABLE, action="append")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    timings = {}
    all_passed = True
    for identity in args.only or SWEEPABLE:
        grid = Grid(**BOUNDS[identity])
        start = time.perf_counter()
        reports = run_sweep(identity, grid, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        body = summarize(identity, reports)
        body["rows"] = [report_json(r, grid.prec) for r in reports]
        (args.out / f"{identity}.json").write_text(dumps(body))
        timings[identity] = round(elapsed, 3)
        all_passed &= body["passed"]
        print(f"{identity:7s} {body['cases'] - body['failed']:4d}/{body['cases']:<4d} "
              f"{'PASS' if body['passed'] else 'FAIL'}  {elapsed:7.2f}s")
    # timings live in their own file so the sweep JSON stays reproducible
    (args.out / "timings.json").write_text(json.dumps(timings, indent=2) + "\n")
    return 0 if all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
