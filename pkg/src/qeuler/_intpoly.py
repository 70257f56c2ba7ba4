"""Dense univariate polynomials over Z, stored as tuples of ints (lowest degree first).

This is the hot loop of the whole package.  Products and quotients of large
polynomials go through Kronecker substitution (pack the coefficients into one
big integer, let GMP do the work, unpack); gcds use the heuristic integer-gcd
method with a primitive-PRS fallback.
"""
from __future__ import annotations

from math import gcd
from typing import Optional, Tuple

import gmpy2

IntPoly = Tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)

_SCHOOLBOOK_CUTOFF = 16
_HEU_ATTEMPTS = 6


def strip(coeffs) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: IntPoly) -> int:
    return len(f) - 1


def max_norm(f: IntPoly) -> int:
    return max(map(abs, f)) if f else 0


def neg(f: IntPoly) -> IntPoly:
    return tuple(-c for c in f)


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    if len(f) < len(g):
        f, g = g, f
    if not g:
        return f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    if len(f) == len(g):
        return strip(out)
    return tuple(out)


def sub(f: IntPoly, g: IntPoly) -> IntPoly:
    return add(f, neg(g))


def scale(f: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    if c == 1:
        return f
    return tuple(c * x for x in f)


def shift(f: IntPoly, k: int) -> IntPoly:
    """Multiply by q**k (k >= 0)."""
    if not f or k == 0:
        return f
    return (0,) * k + f


def valuation(f: IntPoly) -> int:
    """Largest k with q**k dividing f (f nonzero)."""
    k = 0
    while f[k] == 0:
        k += 1
    return k


def inflate(f: IntPoly, a: int) -> IntPoly:
    """Substitute q -> q**a."""
    if a == 1 or len(f) <= 1:
        return f
    out = [0] * ((len(f) - 1) * a + 1)
    out[::a] = f
    return tuple(out)


def content(f: IntPoly) -> int:
    return gcd(*f)


def primitive(f: IntPoly) -> Tuple[int, IntPoly]:
    """Return (c, p) with f = c*p, p primitive with positive leading coefficient."""
    if not f:
        return 0, ZERO
    c = gcd(*f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return 1, f
    return c, tuple(x // c for x in f)


def evaluate_int(f: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def evaluate_frac(f: IntPoly, p: int, r: int) -> Tuple[int, int]:
    """Return (num, r**deg) so that f(p/r) = num / r**deg."""
    if not f:
        return 0, 1
    acc = 0
    rpow = 1
    for c in reversed(f):
        acc = acc * p + c * rpow
        rpow *= r
    return acc, rpow // r


# -- Kronecker substitution -------------------------------------------------

def _bytes_for(bits: int) -> int:
    return max(1, (bits + 7) // 8)


def pack(f: IntPoly, nbytes: int) -> int:
    """Evaluate f at 2**(8*nbytes); requires |coefficients| < 2**(8*nbytes)."""
    pos = bytearray()
    negs = bytearray()
    zero = bytes(nbytes)
    has_neg = False
    for c in f:
        if c >= 0:
            pos += c.to_bytes(nbytes, "little")
            negs += zero
        else:
            pos += zero
            negs += (-c).to_bytes(nbytes, "little")
            has_neg = True
    value = int.from_bytes(pos, "little")
    if has_neg:
        value -= int.from_bytes(negs, "little")
    return value


def unpack(n: int, nbytes: int) -> IntPoly:
    """Inverse of pack for coefficients in the symmetric range (-B/2, B/2]."""
    if n == 0:
        return ZERO
    sign = 1
    if n < 0:
        n, sign = -n, -1
    k = 8 * nbytes
    ndig = n.bit_length() // k + 2
    bias = (1 << (k - 1)) - 1
    offset = bias * (((1 << (k * ndig)) - 1) // ((1 << k) - 1))
    raw = (n + offset).to_bytes(ndig * nbytes, "little")
    frm = int.from_bytes
    out = [frm(raw[i:i + nbytes], "little") - bias for i in range(0, ndig * nbytes, nbytes)]
    if sign < 0:
        out = [-c for c in out]
    return strip(out)


def _schoolbook(f: IntPoly, g: IntPoly) -> IntPoly:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f or not g:
        return ZERO
    if len(f) == 1:
        return scale(g, f[0])
    if len(g) == 1:
        return scale(f, g[0])
    if min(len(f), len(g)) <= _SCHOOLBOOK_CUTOFF:
        return _schoolbook(f, g)
    bits = (max_norm(f).bit_length() + max_norm(g).bit_length()
            + min(len(f), len(g)).bit_length() + 2)
    nb = _bytes_for(bits)
    prod = gmpy2.mpz(pack(f, nb)) * gmpy2.mpz(pack(g, nb))
    return unpack(int(prod), nb)


def sqr(f: IntPoly) -> IntPoly:
    return mul(f, f)


def power(f: IntPoly, k: int) -> IntPoly:
    result = ONE
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = sqr(base)
    return result


def divexact(f: IntPoly, g: IntPoly) -> Optional[IntPoly]:
    """Return h with f == g*h over Z, or None when g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return ZERO
    if len(g) > len(f):
        return None
    if len(g) == 1:
        c = g[0]
        if any(x % c for x in f):
            return None
        return tuple(x // c for x in f)
    if f[-1] % g[-1] or f[0] % g[0]:
        return None
    fnorm_bits = max_norm(f).bit_length() + len(f).bit_length()
    # any true quotient has coefficients below 2**(deg h) * ||f||_2
    mignotte = len(f) - len(g) + fnorm_bits + 2
    bits = max(fnorm_bits, max_norm(g).bit_length()) + 2
    while True:
        nb = _bytes_for(bits)
        qq, r = gmpy2.f_divmod(gmpy2.mpz(pack(f, nb)), gmpy2.mpz(pack(g, nb)))
        if r:
            return None
        h = unpack(int(qq), nb)
        if len(h) == len(f) - len(g) + 1 and mul(g, h) == f:
            return h
        if bits > mignotte:
            return None
        bits *= 2


def divmod_rational(f: IntPoly, g: IntPoly):
    """Long division over Q; returns (quotient, remainder) as lists of Fractions."""
    from fractions import Fraction

    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(c) for c in f]
    lc = Fraction(g[-1])
    dq = len(f) - len(g)
    if dq < 0:
        return [], rem
    quo = [Fraction(0)] * (dq + 1)
    for k in range(dq, -1, -1):
        coef = rem[k + len(g) - 1] / lc
        quo[k] = coef
        if coef:
            for j, b in enumerate(g):
                rem[k + j] -= coef * b
    rem = rem[:len(g) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


# -- gcd --------------------------------------------------------------------

def _prs_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive polynomial remainder sequence; slow but always correct."""
    a, b = f, g
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b) and any(r):
            lr = r[-1]
            d = len(r) - len(b)
            r = [x * lb for x in r]
            for j, c in enumerate(b):
                r[d + j] -= lr * c
            r = list(strip(r))
        a, b = b, primitive(tuple(r))[1]
    return primitive(a)[1]


def gcd_cofactors(f: IntPoly, g: IntPoly) -> Tuple[IntPoly, IntPoly, IntPoly]:
    """Return (h, f/h, g/h) with h = gcd(f, g) primitive and of positive leading coefficient.

    Inputs are assumed primitive with positive leading coefficients, which is
    how every caller in this package holds its polynomials.
    """
    if not f or not g:
        raise ValueError("gcd of the zero polynomial is not used here")
    if len(f) == 1 or len(g) == 1:
        return ONE, f, g
    if f == g:
        return f, ONE, ONE
    vf, vg = valuation(f), valuation(g)
    if vf or vg:
        v = min(vf, vg)
        h, cf, cg = gcd_cofactors(f[vf:], g[vg:])
        return shift(h, v), shift(cf, vf - v), shift(cg, vg - v)

    nb = _bytes_for(max(max_norm(f), max_norm(g)).bit_length() + 3)
    for _ in range(_HEU_ATTEMPTS):
        F = gmpy2.mpz(pack(f, nb))
        G = gmpy2.mpz(pack(g, nb))
        hv = gmpy2.gcd(F, G)
        h = primitive(unpack(int(hv), nb))[1]
        if h:
            cf = divexact(f, h)
            if cf is not None:
                cg = divexact(g, h)
                if cg is not None:
                    return h, cf, cg
        nb = nb + nb // 2 + 1
    h = _prs_gcd(f, g)
    return h, divexact(f, h), divexact(g, h)
