"""Working-precision helpers shared by the numeric routines."""
from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath.libmp import to_str

DEFAULT_PREC = 256
DEFAULT_TOL = "1e-30"


def to_mpf(x) -> mpmath.mpf:
    """Convert at the current working precision; strings may be 'p/q' or decimal."""
    if isinstance(x, mpmath.mpf):
        return +x
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    if isinstance(x, str):
        if "/" in x:
            return to_mpf(Fraction(x))
        return mpmath.mpf(x)
    if isinstance(x, float):
        return mpmath.mpf(repr(x))
    raise TypeError(f"cannot convert {x!r} to a real")


def positive_tol(tol) -> mpmath.mpf:
    t = to_mpf(tol)
    if not t > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return t


def min_terms(lead: mpmath.mpf, ratio: mpmath.mpf, tol: mpmath.mpf) -> int:
    """Smallest N >= 0 with lead * ratio**N <= tol (0 < ratio < 1)."""
    if lead <= tol:
        return 0
    n = int(mpmath.ceil(mpmath.log(tol / lead) / mpmath.log(ratio)))
    n = max(n, 0)
    while n > 0 and lead * ratio ** (n - 1) <= tol:
        n -= 1
    while lead * ratio ** n > tol:
        n += 1
    return n


def digits_for(prec: int) -> int:
    return max(1, int(prec * 0.30102999566398120))


def real_str(x: mpmath.mpf, prec: int = DEFAULT_PREC) -> str:
    """Fixed scientific notation with a digit count tied to the binary precision."""
    if not isinstance(x, mpmath.mpf):
        with mpmath.workprec(prec):
            x = to_mpf(x)
    return to_str(x._mpf_, digits_for(prec), strip_zeros=False,
                  min_fixed=1, max_fixed=0, show_zero_exponent=True)
