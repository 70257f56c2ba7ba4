"""q-brackets, Carlitz-type q-Euler numbers and polynomials, classical Euler polynomials.

Throughout, X stands for q**x and Y for q**y, so the q-Euler polynomial

    E_{n,q}(x) = sum_l C(n,l) q^{xl} E_{l,q} [x]_q^{n-l}

is a polynomial in X whose coefficients live in Q(q).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

import mpmath

from ._numeric import DEFAULT_PREC, DEFAULT_TOL, min_terms, positive_tol, to_mpf
from .algebra import LaurentXY, PolyQ, RatQ, as_rational
from .report import EXACT_ZERO, VerificationReport


# ---------------------------------------------------------------------------
# q-brackets
# ---------------------------------------------------------------------------

def q_bracket_int(n: int, base_power: int = 1) -> PolyQ:
    """[n]_{q^a} = 1 + q^a + ... + q^{a(n-1)}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if base_power < 1:
        raise ValueError("base_power must be >= 1")
    coeffs = [0] * (base_power * (n - 1) + 1) if n else []
    for k in range(n):
        coeffs[base_power * k] = 1
    return PolyQ(coeffs)


@lru_cache(maxsize=None)
def _one_minus_q_inv(base_power: int) -> RatQ:
    return RatQ(1, PolyQ.const(1) - PolyQ.monomial(base_power))


def q_bracket_symbolic(var: str, base_power: int = 1) -> LaurentXY:
    """[v]_{q^a} = (1 - V^a)/(1 - q^a) for v in {x, y, x+y, -x}.

    ``var`` is one of ``"X"``, ``"Y"``, ``"XY"`` or ``"X_inverse"``.
    """
    exps = {"X": (1, 0), "Y": (0, 1), "XY": (1, 1), "X_inverse": (-1, 0)}
    if var not in exps:
        raise ValueError(f"unknown bracket variable {var!r}")
    ex, ey = exps[var]
    c = _one_minus_q_inv(base_power)
    return LaurentXY({(0, 0): c, (base_power * ex, base_power * ey): -c})


# ---------------------------------------------------------------------------
# q-Euler numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QEulerTable:
    """E_{0..N, q^a} as exact rational functions of q."""

    entries: Tuple[RatQ, ...]
    base_power: int

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, n: int) -> RatQ:
        return self.entries[n]


_TABLES: dict = {}
_TABLE_LOCK = threading.Lock()


def _extend(table: List[RatQ], upto: int, a: int) -> None:
    # (1 + Q^{n+1}) E_n = [2]_Q delta_{n,0} - Q sum_{l<n} C(n,l) Q^l E_l,  Q = q^a
    while len(table) <= upto:
        n = len(table)
        if n == 0:
            table.append(RatQ.ONE)
            continue
        acc = RatQ.sum(-comb(n, l) * table[l].mul_q_power(a * (l + 1)) for l in range(n))
        table.append(acc / (PolyQ.const(1) + PolyQ.monomial(a * (n + 1))))


def euler_numbers(N: int, base_power: int = 1) -> QEulerTable:
    """Exact q-Euler numbers E_{n,q^a} for n = 0..N (memoised per base)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if base_power < 1:
        raise ValueError("base_power must be >= 1")
    with _TABLE_LOCK:
        table = _TABLES.setdefault(base_power, [])
        _extend(table, N, base_power)
        return QEulerTable(tuple(table[:N + 1]), base_power)


def euler_number(n: int, base_power: int = 1) -> RatQ:
    return euler_numbers(n, base_power)[n]


def euler_number_series_oracle(n: int, q0, x0=0, tol=DEFAULT_TOL, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Truncated generating-function series [2]_q sum_k (-1)^k q^k [k+x]_q^n.

    The cut-off is the smallest N with [2]_q q^N (1-q)^{-n} / (1-q) <= tol, so
    the returned partial sum is within tol of the full series.
    """
    q0 = as_rational(q0)
    x0 = as_rational(x0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    if x0 < 0:
        raise ValueError("x0 must be >= 0 for the tail bound to hold")
    with mpmath.workprec(prec):
        t = positive_tol(tol)
        q = to_mpf(q0)
        lead = (1 + q) * (1 - q) ** (-n) / (1 - q)
        terms = min_terms(lead, q, t)
        qx = q ** to_mpf(x0)
        total = mpmath.mpf(0)
        qk = mpmath.mpf(1)
        for k in range(terms):
            bracket = (1 - qx * qk) / (1 - q)
            term = qk * bracket ** n
            total += -term if k % 2 else term
            qk *= q
        return (1 + q) * total


# ---------------------------------------------------------------------------
# q-Euler polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArgMonomial:
    """The monomial (q^a)^{arg} = X^x_exp Y^y_exp q^q_exp for an argument under base q^a."""

    x_exp: int = 1
    y_exp: int = 0
    q_exp: int = 0

    @classmethod
    def of(cls, base_power: int, x=0, y=0, const=0) -> "ArgMonomial":
        """Argument x*X + y*Y + const, i.e. (q^a)^{x·x + y·y + const}."""
        parts = [base_power * as_rational(v) for v in (x, y, const)]
        if any(p.denominator != 1 for p in parts):
            raise ValueError("argument does not give integral exponents under this base")
        return cls(*(int(p) for p in parts))


ARG_X = ArgMonomial(1, 0, 0)
ARG_Y = ArgMonomial(0, 1, 0)
ARG_XY = ArgMonomial(1, 1, 0)


@lru_cache(maxsize=None)
def euler_poly_coefficients(n: int, base_power: int = 1) -> Tuple[RatQ, ...]:
    """Coefficients of E_{n,Q}(y) as a polynomial in Z = Q^y, Q = q^a.

    With [y]_Q = (1 - Z)/(1 - Q) the expansion gives
    coefficient of Z^k = C(n,k) sum_{l<=k} C(k,l) (-1)^{k-l} E_{l,Q} / (1-Q)^{n-l}.
    """
    table = euler_numbers(n, base_power)
    inv = _one_minus_q_inv(base_power)
    scaled = [table[l] * inv ** (n - l) for l in range(n + 1)]
    out = []
    for k in range(n + 1):
        c = RatQ.sum(((-1) ** (k - l) * comb(k, l)) * scaled[l] for l in range(k + 1))
        out.append(c * comb(n, k))
    return tuple(out)


def euler_poly_symbolic(n: int, base_power: int = 1, arg: ArgMonomial = ARG_X) -> LaurentXY:
    """E_{n,q^a}(arg) as a Laurent polynomial in X, Y."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = euler_poly_coefficients(n, base_power)
    return LaurentXY.sum(
        LaurentXY.monomial(arg.x_exp * k, arg.y_exp * k, c.mul_q_power(arg.q_exp * k))
        for k, c in enumerate(coeffs)
    )


def euler_poly_eval(n: int, q0, x0, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """sum_l C(n,l) q0^{x0 l} E_{l,q0} [x0]_{q0}^{n-l} with exact E_{l,q0}."""
    q0 = as_rational(q0)
    x0 = as_rational(x0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    table = euler_numbers(n)
    with mpmath.workprec(prec):
        q = to_mpf(q0)
        qx = q ** to_mpf(x0)
        bracket = (1 - qx) / (1 - q)
        total = mpmath.mpf(0)
        for l in range(n + 1):
            total += comb(n, l) * qx ** l * to_mpf(table[l].eval(q0)) * bracket ** (n - l)
        return total


@lru_cache(maxsize=None)
def _bracket_x_powers(n: int) -> Tuple[LaurentXY, ...]:
    bx = q_bracket_symbolic("X")
    out = [LaurentXY.scalar(1)]
    for _ in range(n):
        out.append(out[-1] * bx)
    return tuple(out)


def addition_theorem_expand(n: int, form: str = "first") -> LaurentXY:
    """E_{n,q}(x+y) expanded around y.

    ``first``:  sum_i C(n,i) q^{xi} E_{i,q}(y) [x]_q^{n-i}
    ``second``: sum_i C(n,i) q^{(n-i)x} E_{n-i,q}(y) [x]_q^{i}
    ``direct``: the Laurent expansion at argument x+y
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if form == "direct":
        return euler_poly_symbolic(n, 1, ARG_XY)
    powers = _bracket_x_powers(n)
    if form == "first":
        parts = (
            euler_poly_symbolic(i, 1, ARG_Y) * powers[n - i] * LaurentXY.monomial(i, 0, comb(n, i))
            for i in range(n + 1)
        )
    elif form == "second":
        parts = (
            euler_poly_symbolic(n - i, 1, ARG_Y) * powers[i] * LaurentXY.monomial(n - i, 0, comb(n, i))
            for i in range(n + 1)
        )
    else:
        raise ValueError(f"unknown form {form!r}")
    return LaurentXY.sum(parts)


# ---------------------------------------------------------------------------
# classical Euler polynomials and the q -> 1 bridge
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalEulerTable:
    entries: Tuple[PolyQ, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, n: int) -> PolyQ:
        return self.entries[n]


def classical_euler(N: int) -> ClassicalEulerTable:
    """E_0(x)..E_N(x) from sum_{k<=n} C(n,k) E_k(x) + E_n(x) = 2 x^n."""
    if N < 0:
        raise ValueError("N must be >= 0")
    entries: List[PolyQ] = []
    for n in range(N + 1):
        acc = PolyQ.monomial(n, 2)
        for k in range(n):
            acc = acc - entries[k] * comb(n, k)
        entries.append(acc * Fraction(1, 2))
    return ClassicalEulerTable(tuple(entries))


def q_limit_case(n: int) -> VerificationReport:
    """E_{n,q} at q = 1 against the classical E_n(0), exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    got = euler_number(n).eval(1)
    want = classical_euler(n)[n](0)
    params = (("n", n), ("q_limit", got), ("classical", want))
    if got == want:
        return VerificationReport("LIMIT", params, "symbolic", True, EXACT_ZERO)
    return VerificationReport("LIMIT", params, "symbolic", False, got - want, {"n": n})


def q_limit_check(N: int) -> VerificationReport:
    """Compare E_{n,q} at q = 1 against E_n(0) exactly for every n <= N."""
    if N < 0:
        raise ValueError("N must be >= 0")
    table = euler_numbers(N)
    classical = classical_euler(N)
    params = (("n_max", N),)
    for n in range(N + 1):
        got = table[n].eval(1)
        want = classical[n](0)
        if got != want:
            return VerificationReport("LIMIT", params, "symbolic", False, got - want,
                                      {"n": n, "q_limit": got, "classical": want})
    return VerificationReport("LIMIT", params, "symbolic", True, EXACT_ZERO)
