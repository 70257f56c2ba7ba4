"""Certified evaluation of the alternating q-Euler zeta series at real s.

    zeta_{E,q^a}(s, x) = [2]_{q^a} sum_{n>=0} (-1)^n q^{an} / [n+x]_{q^a}^s,   x > 0

With Q = q^a in (0,1) every term is bounded by [2]_Q Q^n B, where
B = [x]_Q^{-s} for s >= 0 and B = (1-Q)^{s} for s < 0, so the tail after N
terms is at most [2]_Q B Q^N / (1 - Q).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ._numeric import DEFAULT_PREC, DEFAULT_TOL, min_terms, positive_tol, to_mpf
from .algebra import as_rational
from .core import euler_poly_eval
from .report import VerificationReport, require_odd


@dataclass(frozen=True)
class ZetaValue:
    value: mpmath.mpf
    tail_bound: mpmath.mpf
    terms_used: int
    s: mpmath.mpf
    x: Fraction
    q0: Fraction
    base_power: int


def _check_domain(x: Fraction, q0: Fraction) -> None:
    if x <= 0:
        raise ValueError(f"x must be > 0 (got {x})")
    if not 0 < q0 < 1:
        raise ValueError(f"q0 must lie in (0, 1) (got {q0})")


def _partial(s, x: Fraction, q0: Fraction, a: int, tol):
    """(value, tail_bound, terms, lead) at the current working precision."""
    Q = to_mpf(q0) ** a
    two = 1 + Q
    if s >= 0:
        B = ((1 - Q ** to_mpf(x)) / (1 - Q)) ** (-s)
    else:
        B = (1 - Q) ** s
    lead = two * B / (1 - Q)
    N = min_terms(lead, Q, tol)
    Qx = Q ** to_mpf(x)
    total = mpmath.mpf(0)
    Qn = mpmath.mpf(1)
    for n in range(N):
        term = Qn * ((1 - Qx * Qn) / (1 - Q)) ** (-s)
        total += -term if n % 2 else term
        Qn *= Q
    return two * total, lead * Q ** N, N, lead


def zeta_eval(s, x, q0, base_power: int = 1, tol=DEFAULT_TOL, prec: int = DEFAULT_PREC) -> ZetaValue:
    x = as_rational(x)
    q0 = as_rational(q0)
    _check_domain(x, q0)
    if base_power < 1:
        raise ValueError("base_power must be >= 1")
    with mpmath.workprec(prec):
        t = positive_tol(tol)
        s = to_mpf(s)
        value, tail, N, _ = _partial(s, x, q0, base_power, t)
        return ZetaValue(value, tail, N, s, x, q0, base_power)


def interpolation_check(m: int, x, q0, tol=DEFAULT_TOL, prec: int = DEFAULT_PREC) -> VerificationReport:
    """zeta at s = -m against E_{m,q}(x) from the exact umbral expansion."""
    if m < 0:
        raise ValueError("m must be >= 0")
    x = as_rational(x)
    q0 = as_rational(q0)
    z = zeta_eval(-m, x, q0, 1, tol, prec)
    poly = euler_poly_eval(m, q0, x, prec)
    with mpmath.workprec(prec):
        t = positive_tol(tol)
        dev = abs(z.value - poly)
        bound = 2 * t
        passed = bool(dev <= bound)
    params = (
        ("m", m), ("x", x), ("q", q0), ("tol", t), ("certified_bound", bound),
        ("zeta_value", z.value), ("poly_value", poly),
        ("tail_bound", z.tail_bound), ("terms_used", z.terms_used),
    )
    return VerificationReport("EQ5", params, "numeric", passed, dev)


@dataclass(frozen=True)
class Thm21Side:
    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms_used: int


def _thm21_side(s, a: int, b: int, x: Fraction, q0: Fraction, tol, prec: int) -> Thm21Side:
    """[2]_{q^b} [b]_q^s sum_{j<a} (-1)^j q^{bj} zeta_{E,q^a}(s, bx + bj/a)."""
    q = to_mpf(q0)
    pref0 = (1 + q ** b) * ((1 - q ** b) / (1 - q)) ** s
    prefs = [pref0 * q ** (b * j) for j in range(a)]
    tol_j = tol / (a * max(prefs))
    eps = mpmath.mpf(2) ** (8 - prec)
    total = mpmath.mpf(0)
    err = mpmath.mpf(0)
    rounding = mpmath.mpf(0)
    terms = 0
    for j in range(a):
        value, tail, N, lead = _partial(s, b * x + Fraction(b * j, a), q0, a, tol_j)
        total += -prefs[j] * value if j % 2 else prefs[j] * value
        err += prefs[j] * tail
        rounding += prefs[j] * lead * (N + 1) * eps
        terms += N
    return Thm21Side(total, err + rounding, terms)


def thm21_check(s, a: int, b: int, x, q0, tol=DEFAULT_TOL, prec: int = DEFAULT_PREC,
                allow_even: bool = False) -> VerificationReport:
    """Numeric zeta-level symmetry in (a, b) at real s.

    Each side's truncation error is budgeted to at most tol; the report passes
    when |LHS - RHS| is within the sum of both sides' certified errors.
    """
    require_odd(a, b, allow_even)
    x = as_rational(x)
    q0 = as_rational(q0)
    _check_domain(x, q0)
    with mpmath.workprec(prec):
        t = positive_tol(tol)
        s = to_mpf(s)
        lhs = _thm21_side(s, a, b, x, q0, t, prec)
        rhs = _thm21_side(s, b, a, x, q0, t, prec)
        dev = abs(lhs.value - rhs.value)
        bound = lhs.error_bound + rhs.error_bound
        passed = bool(dev <= bound)
    params = (
        ("s", s), ("a", a), ("b", b), ("x", x), ("q", q0), ("tol", t),
        ("certified_bound", bound), ("lhs", lhs.value), ("rhs", rhs.value),
        ("terms_used", lhs.terms_used + rhs.terms_used),
    )
    return VerificationReport("THM21", params, "numeric", passed, dev)
