"""Show which (a, b) parities break the polynomial-level symmetry.

Prints a small table of pass/fail for every a, b <= --max at a fixed n, with
the parity guard switched off.  Odd pairs should all pass.
"""
from __future__ import annotations

import argparse

from qeuler.verify import verify_thm22


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max", type=int, default=6)
    args = ap.parse_args()

    ab = range(1, args.max + 1)
    print("a\\b " + " ".join(f"{b:>2d}" for b in ab))
    for a in ab:
        marks = ("ok" if verify_thm22(args.n, a, b, allow_even=True).passed else " x" for b in ab)
        print(f"{a:>3d} " + " ".join(marks))


if __name__ == "__main__":
    main()
