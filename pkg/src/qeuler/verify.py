"""Exact symbolic checks of the q-Euler symmetry identities.

q is an indeterminate and X = q^x, Y = q^y are independent Laurent variables.
An argument such as bx + bj/a under base q^a becomes the monomial X^{ab} q^{bj},
so every side below is an honest element of Q(q)[X, X^-1, Y] and a check
passes only if the difference is the zero element.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Tuple

from . import _intpoly as ip
from .algebra import LaurentXY, PolyQ, RatQ, as_rational
from .core import (
    ARG_XY,
    ARG_Y,
    ArgMonomial,
    addition_theorem_expand,
    euler_poly_symbolic,
    q_bracket_int,
    q_bracket_symbolic,
)
from .report import EXACT_ZERO, VerificationReport, laurent_report, require_odd


# ---------------------------------------------------------------------------
# alternating power sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SStarSum:
    n: int
    i: int
    a: int
    base_power: int
    value: PolyQ


@lru_cache(maxsize=None)
def _s_star_int(n: int, i: int, a: int, b: int) -> ip.IntPoly:
    acc = ip.ZERO
    bracket = ip.ZERO  # [j]_{q^b}; power(ZERO, 0) is ONE, matching 0^0 = 1
    for j in range(a):
        term = ip.shift(ip.power(bracket, i), b * (n + 1 - i) * j)
        acc = ip.sub(acc, term) if j % 2 else ip.add(acc, term)
        bracket = ip.add(bracket, ip.shift(ip.ONE, b * j))
    return acc


def s_star(n: int, i: int, a: int, base_power: int = 1) -> SStarSum:
    """sum_{j<a} (-1)^j Q^{(n+1-i)j} [j]_Q^i with Q = q^{base_power}."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n (got n={n}, i={i})")
    if a < 1 or base_power < 1:
        raise ValueError("a and base_power must be >= 1")
    value = PolyQ(_s_star_int(n, i, a, base_power))
    return SStarSum(n, i, a, base_power, value)


# ---------------------------------------------------------------------------
# polynomial-level symmetry
# ---------------------------------------------------------------------------

def _two_bracket(b: int) -> PolyQ:
    return PolyQ.const(1) + PolyQ.monomial(b)


@lru_cache(maxsize=None)
def _thm22_side(n: int, a: int, b: int) -> LaurentXY:
    """[2]_{q^b} [a]_q^n sum_{j<a} (-1)^j q^{bj} E_{n,q^a}(bx + bj/a)."""
    parts = []
    for j in range(a):
        arg = ArgMonomial.of(a, x=b, const=Fraction(b * j, a))
        sign = -1 if j % 2 else 1
        parts.append(euler_poly_symbolic(n, a, arg).scale(RatQ.q_power(b * j) * sign))
    pref = _two_bracket(b) * q_bracket_int(a) ** n
    return LaurentXY.sum(parts).scale(pref)


def thm22_sides(n: int, a: int, b: int) -> Tuple[LaurentXY, LaurentXY]:
    return _thm22_side(n, a, b), _thm22_side(n, b, a)


def verify_thm22(n: int, a: int, b: int, allow_even: bool = False) -> VerificationReport:
    if n < 0:
        raise ValueError("n must be >= 0")
    require_odd(a, b, allow_even)
    lhs, rhs = thm22_sides(n, a, b)
    return laurent_report("THM22", (("n", n), ("a", a), ("b", b)), lhs - rhs)


# ---------------------------------------------------------------------------
# S*-sum form
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _thm24_side(n: int, a: int, b: int) -> LaurentXY:
    """[2]_{q^b} sum_i C(n,i) [a]_q^{n-i} [b]_q^i E_{n-i,q^a}(bx) S*_{n,i,q^b}(a)."""
    qa, qb = q_bracket_int(a), q_bracket_int(b)
    two = _two_bracket(b)
    arg = ArgMonomial.of(a, x=b)
    parts = []
    for i in range(n + 1):
        factor = two * qa ** (n - i) * qb ** i * s_star(n, i, a, b).value * comb(n, i)
        if factor:
            parts.append(euler_poly_symbolic(n - i, a, arg).scale(factor))
    return LaurentXY.sum(parts)


def thm24_sides(n: int, a: int, b: int) -> Tuple[LaurentXY, LaurentXY]:
    return _thm24_side(n, a, b), _thm24_side(n, b, a)


def verify_thm24(n: int, a: int, b: int, check_intermediates: bool = False,
                 allow_even: bool = False) -> VerificationReport:
    """S*-sum symmetry; optionally also each side against the polynomial-level side it rearranges."""
    if n < 0:
        raise ValueError("n must be >= 0")
    require_odd(a, b, allow_even)
    lhs, rhs = thm24_sides(n, a, b)
    params = (("n", n), ("a", a), ("b", b), ("check_intermediates", check_intermediates))
    checks = [("symmetry", lhs - rhs)]
    if check_intermediates:
        l22, r22 = thm22_sides(n, a, b)
        checks.append(("lhs_rearrangement", lhs - l22))
        checks.append(("rhs_rearrangement", rhs - r22))
    for name, diff in checks:
        if not diff.is_zero():
            return laurent_report("THM24", params, diff, {"part": name})
    return VerificationReport("THM24", params, "symbolic", True, EXACT_ZERO)


# ---------------------------------------------------------------------------
# addition theorem
# ---------------------------------------------------------------------------

def verify_prop23(n: int) -> VerificationReport:
    if n < 0:
        raise ValueError("n must be >= 0")
    first = addition_theorem_expand(n, "first")
    second = addition_theorem_expand(n, "second")
    direct = addition_theorem_expand(n, "direct")
    params = (("n", n),)
    for name, diff in (("first_vs_second", first - second), ("first_vs_direct", first - direct)):
        if not diff.is_zero():
            return laurent_report("PROP23", params, diff, {"part": name})
    return VerificationReport("PROP23", params, "symbolic", True, EXACT_ZERO)


# ---------------------------------------------------------------------------
# scalar lemma
# ---------------------------------------------------------------------------

def exact_power(base: Fraction, e: Fraction) -> Fraction:
    """base**e when it is rational; ValueError otherwise."""
    import gmpy2

    base = as_rational(base)
    e = as_rational(e)
    if base <= 0:
        raise ValueError("base must be positive")
    r = e.denominator
    roots = []
    for part in (base.numerator, base.denominator):
        root, exact = gmpy2.iroot(part, r)
        if not exact:
            raise ValueError(f"{base}**{e} is not rational")
        roots.append(int(root))
    return Fraction(roots[0], roots[1]) ** e.numerator


def _q_bracket_value(z: Fraction, q0: Fraction) -> Fraction:
    return (1 - exact_power(q0, z)) / (1 - q0)


def verify_eq13(x, y, m: int, u, v, q0) -> VerificationReport:
    """[x]_q u + q^x [y+m]_q (u+v) = [x+y+m]_q (u+v) - [x]_q v at a rational point."""
    x, y, u, v, q0 = (as_rational(t) for t in (x, y, u, v, q0))
    if m < 0:
        raise ValueError("m must be >= 0")
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    bx = _q_bracket_value(x, q0)
    lhs = bx * u + exact_power(q0, x) * _q_bracket_value(y + m, q0) * (u + v)
    rhs = _q_bracket_value(x + y + m, q0) * (u + v) - bx * v
    params = (("x", x), ("y", y), ("m", m), ("u", u), ("v", v), ("q", q0),
              ("lhs", lhs), ("rhs", rhs))
    diff = lhs - rhs
    if diff == 0:
        return VerificationReport("EQ13", params, "symbolic", True, EXACT_ZERO)
    return VerificationReport("EQ13", params, "symbolic", False, diff)


# ---------------------------------------------------------------------------
# two-variable umbral identity
# ---------------------------------------------------------------------------

# The generating-function step behind this identity is read with the
# exponential kernel on both sides; the report carries that reading.
EQ17_READING = "exp([x+y+m]_q (u+v)) kernel on the right-hand generating function"


@lru_cache(maxsize=None)
def _bracket_powers(var: str, k: int) -> Tuple[LaurentXY, ...]:
    br = q_bracket_symbolic(var)
    out = [LaurentXY.scalar(1)]
    for _ in range(k):
        out.append(out[-1] * br)
    return tuple(out)


def eq17_sides(m: int, n: int) -> Tuple[LaurentXY, LaurentXY]:
    """LHS = sum_{k<=m} C(m,k) q^{(n+k)x} E_{n+k,q}(y) [x]_q^{m-k},
    RHS = sum_{k<=n} C(n,k) q^{(n-k)x} E_{m+k,q}(x+y) [-x]_q^{n-k}."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    px = _bracket_powers("X", m)
    pxi = _bracket_powers("X_inverse", n)
    lhs = LaurentXY.sum(
        euler_poly_symbolic(n + k, 1, ARG_Y) * px[m - k] * LaurentXY.monomial(n + k, 0, comb(m, k))
        for k in range(m + 1)
    )
    rhs = LaurentXY.sum(
        euler_poly_symbolic(m + k, 1, ARG_XY) * pxi[n - k] * LaurentXY.monomial(n - k, 0, comb(n, k))
        for k in range(n + 1)
    )
    return lhs, rhs


def verify_eq17(m: int, n: int) -> VerificationReport:
    lhs, rhs = eq17_sides(m, n)
    params = (("m", m), ("n", n), ("reading", EQ17_READING))
    return laurent_report("EQ17", params, lhs - rhs)
