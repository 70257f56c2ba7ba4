"""Grid runners behind the ``sweep`` subcommand and the experiment scripts."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .core import q_limit_case
from .report import VerificationReport
from .verify import verify_eq13, verify_eq17, verify_prop23, verify_thm22, verify_thm24
from .zeta import interpolation_check, thm21_check

SWEEPABLE = ("thm21", "thm22", "thm24", "prop23", "eq5", "eq13", "eq17", "limit")


@dataclass(frozen=True)
class Grid:
    n_max: int = 10
    odd_max: int = 7
    s_values: Tuple[str, ...] = ("1.5", "2.5")
    x_values: Tuple[Fraction, ...] = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    q_values: Tuple[Fraction, ...] = (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10))
    tol: str = "1e-30"
    prec: int = 256
    check_intermediates: bool = False


def _odd(upto: int) -> List[int]:
    return list(range(1, upto + 1, 2))


def cases(identity: str, grid: Grid) -> List[Tuple[str, tuple]]:
    """The ordered list of (identity, args) cells for a sweep."""
    if grid.n_max < 0:
        raise ValueError("grid bound --n-max must be >= 0")
    odd = _odd(grid.odd_max)
    out: List[Tuple[str, tuple]] = []
    if identity in ("thm22", "thm24", "thm21") and not odd:
        raise ValueError("empty grid: --odd-max must be >= 1")
    if identity == "thm22":
        out = [(identity, (n, a, b)) for n in range(grid.n_max + 1) for a in odd for b in odd]
    elif identity == "thm24":
        out = [(identity, (n, a, b, grid.check_intermediates))
               for n in range(grid.n_max + 1) for a in odd for b in odd]
    elif identity == "prop23":
        out = [(identity, (n,)) for n in range(grid.n_max + 1)]
    elif identity == "eq17":
        out = [(identity, (m, t - m)) for t in range(grid.n_max + 1) for m in range(t + 1)]
    elif identity == "eq5":
        out = [(identity, (m, x, q, grid.tol, grid.prec))
               for m in range(grid.n_max + 1) for x in grid.x_values for q in grid.q_values]
    elif identity == "thm21":
        x = grid.x_values[0]
        q = grid.q_values[0]
        out = [(identity, (s, a, b, x, q, grid.tol, grid.prec))
               for s in grid.s_values for a in odd for b in odd]
    elif identity == "eq13":
        u, v = Fraction(1, 2), Fraction(1, 3)
        out = [(identity, (x, y, m, u, v, q))
               for m in range(grid.n_max + 1) for x in range(3) for y in range(3)
               for q in grid.q_values]
    elif identity == "limit":
        out = [(identity, (n,)) for n in range(grid.n_max + 1)]
    else:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(SWEEPABLE)}")
    if not out:
        raise ValueError("empty grid")
    return out


_RUNNERS = {
    "thm21": thm21_check,
    "thm22": verify_thm22,
    "thm24": verify_thm24,
    "prop23": verify_prop23,
    "eq5": interpolation_check,
    "eq13": verify_eq13,
    "eq17": verify_eq17,
    "limit": q_limit_case,
}


def run_case(cell: Tuple[str, tuple]) -> VerificationReport:
    identity, args = cell
    return _RUNNERS[identity](*args)


def run_sweep(identity: str, grid: Grid, jobs: int = 1) -> List[VerificationReport]:
    """Run every cell; results come back in grid order whatever the job count."""
    cells = cases(identity, grid)
    if jobs <= 1:
        return [run_case(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_case, cells))


def summarize(identity: str, reports: Sequence[VerificationReport]) -> dict:
    failed = sum(not r.passed for r in reports)
    return {"identity": identity, "cases": len(reports), "failed": failed, "passed": failed == 0}
