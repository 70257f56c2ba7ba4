"""Exact arithmetic: rationals, polynomials in q, the field Q(q), Laurent polynomials in X, Y.

Scalars are :class:`fractions.Fraction` (always reduced, positive denominator),
so ``BigRat`` is simply an alias for it.

``RatQ`` keeps a canonical form ``c * N(q) / D(q)`` where ``N`` and ``D`` are
coprime primitive integer polynomials with positive leading coefficients and
``c`` is a nonzero rational.  That triple is unique for every element of Q(q),
so equality is structural.  The user-facing ``num``/``den`` views present the
same value with a monic denominator.

``LaurentXY`` is a sparse map ``(e_X, e_Y) -> RatQ`` where X stands for q**x
and Y for q**y.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, Iterable, Iterator, Sequence, Tuple, Union

from . import _intpoly as ip
from ._intpoly import ONE, ZERO, IntPoly

BigRat = Fraction

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def as_rational(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"3/10"`` or ``"0.7"`` exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(str(value))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(x: Fraction) -> str:
    """Decimal-free ``p/q`` string (denominator always written)."""
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# PolyQ
# ---------------------------------------------------------------------------

class PolyQ:
    """Dense univariate polynomial over Q, coefficients in ascending powers.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, c: Scalar) -> "PolyQ":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "PolyQ":
        return cls((0,) * k + (c,))

    @classmethod
    def gen(cls) -> "PolyQ":
        return cls.monomial(1)

    @classmethod
    def _from_int(cls, f: IntPoly, c: Fraction = Fraction(1)) -> "PolyQ":
        out = cls.__new__(cls)
        out.coeffs = tuple(c * x for x in f) if c != 1 else tuple(Fraction(x) for x in f)
        return out

    def _split(self) -> Tuple[Fraction, IntPoly]:
        """Return (content, primitive integer part with positive leading coefficient)."""
        if not self.coeffs:
            return Fraction(0), ZERO
        den = lcm(*(x.denominator for x in self.coeffs))
        ints = tuple(x.numerator * (den // x.denominator) for x in self.coeffs)
        g, prim = ip.primitive(ints)
        return Fraction(g, den), prim

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "PolyQ":
        lc = self.leading
        return PolyQ(c / lc for c in self.coeffs) if lc and lc != 1 else self

    def _coerce(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ(c * other for c in self.coeffs)
        if not isinstance(other, PolyQ):
            return NotImplemented
        ca, pa = self._split()
        cb, pb = other._split()
        return PolyQ._from_int(ip.mul(pa, pb), ca * cb) if pa and pb else PolyQ()

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        c, p = self._split()
        if not p:
            return PolyQ.const(1) if k == 0 else PolyQ()
        return PolyQ._from_int(ip.power(p, k), c ** k)

    def __divmod__(self, other: "PolyQ"):
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        ca, pa = self._split()
        cb, pb = other._split()
        quo, rem = ip.divmod_rational(pa, pb)
        s = ca / cb if ca else Fraction(0)
        return PolyQ(s * x for x in quo), PolyQ(ca * x for x in rem)

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def gcd(self, other: "PolyQ") -> "PolyQ":
        """Monic gcd over Q (zero if both are zero)."""
        if not self:
            return other.monic()
        if not other:
            return self.monic()
        h, _, _ = ip.gcd_cofactors(self._split()[1], other._split()[1])
        return PolyQ._from_int(h, Fraction(1, h[-1]))

    def __call__(self, q0: Scalar) -> Fraction:
        q0 = as_rational(q0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def subst_power(self, a: int) -> "PolyQ":
        if a < 1:
            raise ValueError("substitution power must be >= 1")
        if a == 1 or len(self.coeffs) <= 1:
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * a + 1)
        out[::a] = self.coeffs
        return PolyQ(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("PolyQ", self.coeffs))

    def __repr__(self) -> str:
        return f"PolyQ([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return _poly_str([c for c in self.coeffs])


def _poly_str(coeffs: Sequence[Fraction], var: str = "q") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}*{mono}"
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


# ---------------------------------------------------------------------------
# RatQ
# ---------------------------------------------------------------------------

def _combine(terms: Iterable[Tuple[Fraction, IntPoly]]) -> Tuple[Fraction, IntPoly]:
    """sum(c * p) written as s * T with T primitive, positive leading coefficient."""
    terms = list(terms)
    den = lcm(*(c.denominator for c, _ in terms))
    out = [0] * max(len(p) for _, p in terms)
    for c, p in terms:
        m = c.numerator * (den // c.denominator)
        for i, x in enumerate(p):
            out[i] += m * x
    T = ip.strip(out)
    if not T:
        return Fraction(0), ZERO
    g, T = ip.primitive(T)
    return Fraction(g, den), T


class RatQ:
    """Element of Q(q) in canonical reduced form.

    ``RatQ(num, den)`` accepts ints, Fractions, PolyQ or RatQ for either part.
    """

    __slots__ = ("_c", "_n", "_d", "_hash")

    def __new__(cls, num=0, den=1):
        if isinstance(num, RatQ) or isinstance(den, RatQ):
            return _coerce(num) / _coerce(den)
        cn, n = _split(num)
        cd, d = _split(den)
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        if not n:
            return _ZERO
        _, n, d = ip.gcd_cofactors(n, d)
        return cls._from_parts(cn / cd, n, d)

    @classmethod
    def _from_parts(cls, c: Fraction, n: IntPoly, d: IntPoly) -> "RatQ":
        out = object.__new__(cls)
        out._c = c
        out._n = n
        out._d = d
        out._hash = None
        return out

    # -- constructors -------------------------------------------------------

    @classmethod
    def q_power(cls, k: int) -> "RatQ":
        """The monomial q**k (k may be negative)."""
        if k >= 0:
            return cls._from_parts(Fraction(1), ip.shift(ONE, k), ONE)
        return cls._from_parts(Fraction(1), ONE, ip.shift(ONE, -k))

    @classmethod
    def from_poly(cls, p: PolyQ) -> "RatQ":
        c, n = p._split()
        return cls._from_parts(c, n, ONE) if n else _ZERO

    @staticmethod
    def sum(items: Iterable) -> "RatQ":
        """Sum many terms, normalising once per distinct denominator."""
        groups: Dict[IntPoly, list] = {}
        for r in items:
            r = _coerce(r)
            if r._n:
                groups.setdefault(r._d, []).append((r._c, r._n))
        partials = []
        for d, terms in groups.items():
            s, T = _combine(terms)
            if not T:
                continue
            if d != ONE:
                _, T, d = ip.gcd_cofactors(T, d)
            partials.append(RatQ._from_parts(s, T, d))
        return reduce(_add, partials, _ZERO)

    # -- views --------------------------------------------------------------

    @property
    def num(self) -> PolyQ:
        """Numerator of the representation with monic denominator."""
        if not self._n:
            return PolyQ()
        return PolyQ._from_int(self._n, self._c / self._d[-1])

    @property
    def den(self) -> PolyQ:
        """Monic denominator."""
        return PolyQ._from_int(self._d, Fraction(1, self._d[-1]))

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self) -> bool:
        return bool(self._n)

    def is_polynomial(self) -> bool:
        return self._d == ONE

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "RatQ":
        if not self._n:
            return self
        return RatQ._from_parts(-self._c, self._n, self._d)

    def __sub__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _add(self, -other)

    def __rsub__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _add(other, -self)

    def __mul__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "RatQ":
        if not self._n:
            raise ZeroDivisionError("division by zero rational function")
        return RatQ._from_parts(1 / self._c, self._d, self._n)

    def __truediv__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = _coerce_or_ni(other)
        return other if other is NotImplemented else _mul(other, self.inverse())

    def __pow__(self, k: int) -> "RatQ":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return _ONE
        if not self._n:
            return _ZERO
        return RatQ._from_parts(self._c ** k, ip.power(self._n, k), ip.power(self._d, k))

    def mul_q_power(self, k: int) -> "RatQ":
        """Multiply by q**k without a general gcd."""
        if not self._n or k == 0:
            return self
        vn, vd = ip.valuation(self._n), ip.valuation(self._d)
        e = vn - vd + k
        n, d = self._n[vn:], self._d[vd:]
        if e >= 0:
            return RatQ._from_parts(self._c, ip.shift(n, e), d)
        return RatQ._from_parts(self._c, n, ip.shift(d, -e))

    def subst_power(self, a: int) -> "RatQ":
        """Replace q by q**a.  Coprimality survives the substitution, so no gcd is needed."""
        if a < 1:
            raise ValueError("substitution power must be >= 1")
        if a == 1 or not self._n:
            return self
        return RatQ._from_parts(self._c, ip.inflate(self._n, a), ip.inflate(self._d, a))

    def eval(self, q0: Scalar) -> Fraction:
        q0 = as_rational(q0)
        p, r = q0.numerator, q0.denominator
        dv, dr = ip.evaluate_frac(self._d, p, r)
        if dv == 0:
            raise PoleError(f"pole at q = {q0}")
        if not self._n:
            return Fraction(0)
        nv, nr = ip.evaluate_frac(self._n, p, r)
        return self._c * Fraction(nv * dr, dv * nr)

    __call__ = eval

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce_or_ni(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c and self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._n, self._d))
        return self._hash

    def __repr__(self) -> str:
        return f"RatQ({self.num!s}, {self.den!s})"

    def __str__(self) -> str:
        if self._d == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _split(x) -> Tuple[Fraction, IntPoly]:
    if isinstance(x, PolyQ):
        return x._split()
    x = as_rational(x)
    return (x, ONE) if x else (Fraction(0), ZERO)


def _coerce(x) -> RatQ:
    if isinstance(x, RatQ):
        return x
    if isinstance(x, PolyQ):
        return RatQ.from_poly(x)
    x = as_rational(x)
    return RatQ._from_parts(x, ONE, ONE) if x else _ZERO


def _coerce_or_ni(x):
    if isinstance(x, (RatQ, PolyQ, int, Fraction)):
        return _coerce(x)
    return NotImplemented


def _add(x: RatQ, y: RatQ) -> RatQ:
    if not x._n:
        return y
    if not y._n:
        return x
    if x._d == y._d:
        s, T = _combine(((x._c, x._n), (y._c, y._n)))
        if not T:
            return _ZERO
        d = x._d
        if d != ONE:
            _, T, d = ip.gcd_cofactors(T, d)
        return RatQ._from_parts(s, T, d)
    # Henrici: only the common part of the denominators can cancel
    g, d1, d2 = ip.gcd_cofactors(x._d, y._d)
    s, T = _combine(((x._c, ip.mul(x._n, d2)), (y._c, ip.mul(y._n, d1))))
    if not T:
        return _ZERO
    if g != ONE:
        _, T, g = ip.gcd_cofactors(T, g)
    return RatQ._from_parts(s, T, ip.mul(g, ip.mul(d1, d2)))


def _mul(x: RatQ, y: RatQ) -> RatQ:
    if not x._n or not y._n:
        return _ZERO
    n1, d1, n2, d2 = x._n, x._d, y._n, y._d
    if d2 != ONE and len(n1) > 1:
        _, n1, d2 = ip.gcd_cofactors(n1, d2)
    if d1 != ONE and len(n2) > 1:
        _, n2, d1 = ip.gcd_cofactors(n2, d1)
    return RatQ._from_parts(x._c * y._c, ip.mul(n1, n2), ip.mul(d1, d2))


_ZERO = RatQ._from_parts(Fraction(0), ZERO, ONE)
_ONE = RatQ._from_parts(Fraction(1), ONE, ONE)
RatQ.ZERO = _ZERO
RatQ.ONE = _ONE


def ratq_make(num: PolyQ, den: PolyQ) -> RatQ:
    return RatQ(num, den)


def ratq_arith(a: RatQ, b: RatQ, op: str) -> RatQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratq_eval(r: RatQ, q0: Scalar) -> Fraction:
    return r.eval(q0)


def ratq_subst_power(r: RatQ, a: int) -> RatQ:
    return r.subst_power(a)


# ---------------------------------------------------------------------------
# LaurentXY
# ---------------------------------------------------------------------------

Exponent = Tuple[int, int]

_VARS = ("X", "Y")


class LaurentXY:
    """Sparse Laurent polynomial in X = q**x and Y = q**y over Q(q).

    Instances are immutable; every operation returns a new object.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Exponent, object] | None = None):
        clean: Dict[Exponent, RatQ] = {}
        for (ex, ey), c in (terms or {}).items():
            c = _coerce(c)
            if c:
                clean[(int(ex), int(ey))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponent, RatQ]) -> "LaurentXY":
        out = object.__new__(cls)
        out._terms = terms
        out._hash = None
        return out

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, coeff=1) -> "LaurentXY":
        return cls({(ex, ey): coeff})

    @classmethod
    def scalar(cls, c) -> "LaurentXY":
        return cls({(0, 0): c})

    @staticmethod
    def sum(items: Iterable["LaurentXY"]) -> "LaurentXY":
        buckets: Dict[Exponent, list] = {}
        for p in items:
            for k, c in p._terms.items():
                buckets.setdefault(k, []).append(c)
        out = {}
        for k, cs in buckets.items():
            c = cs[0] if len(cs) == 1 else RatQ.sum(cs)
            if c:
                out[k] = c
        return LaurentXY._wrap(out)

    # -- access -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, RatQ]]:
        return iter(sorted(self._terms.items()))

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, ex: int = 0, ey: int = 0) -> RatQ:
        return self._terms.get((ex, ey), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentXY):
            other = LaurentXY.scalar(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentXY._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentXY":
        return LaurentXY._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentXY):
            other = LaurentXY.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r) -> "LaurentXY":
        r = _coerce(r)
        if not r:
            return LaurentXY._wrap({})
        if r == _ONE:
            return self
        return LaurentXY._wrap({k: c * r for k, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentXY):
            if isinstance(other, (RatQ, PolyQ, int, Fraction)):
                return self.scale(other)
            return NotImplemented
        buckets: Dict[Exponent, list] = {}
        for (ax, ay), ca in self._terms.items():
            for (bx, by), cb in other._terms.items():
                buckets.setdefault((ax + bx, ay + by), []).append(ca * cb)
        out = {}
        for k, cs in buckets.items():
            c = cs[0] if len(cs) == 1 else RatQ.sum(cs)
            if c:
                out[k] = c
        return LaurentXY._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentXY":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((ex, ey), c), = self._terms.items()
            return LaurentXY._wrap({(ex * k, ey * k): c ** k})
        result = LaurentXY.scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def subst_var(self, var: str, k: int) -> "LaurentXY":
        """Replace var by var**k (multiply that exponent by k)."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        if var == "X":
            return LaurentXY._wrap({(ex * k, ey): c for (ex, ey), c in self._terms.items()})
        if var == "Y":
            return LaurentXY._wrap({(ex, ey * k): c for (ex, ey), c in self._terms.items()})
        raise ValueError(f"unknown variable {var!r}")

    def specialize(self, var: str, q_power: int = 0) -> "LaurentXY":
        """Set var = q**q_power, folding its exponent into the coefficients (x = q_power)."""
        if var not in _VARS:
            raise ValueError(f"unknown variable {var!r}")
        idx = _VARS.index(var)
        parts = []
        for k, c in self._terms.items():
            e = k[idx]
            key = (0, k[1]) if idx == 0 else (k[0], 0)
            parts.append(LaurentXY._wrap({key: c.mul_q_power(e * q_power)}))
        return LaurentXY.sum(parts)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentXY):
            if isinstance(other, (RatQ, PolyQ, int, Fraction)):
                other = LaurentXY.scalar(other)
            else:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentXY(0)"
        parts = []
        for (ex, ey), c in self.items():
            mono = "*".join(m for m in (_mono("X", ex), _mono("Y", ey)) if m)
            parts.append(f"[{c}]" + (f"*{mono}" if mono else ""))
        return "LaurentXY(" + " + ".join(parts) + ")"


def _mono(v: str, e: int) -> str:
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


def laurent_arith(a: LaurentXY, b, op: str) -> LaurentXY:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale_by_RatQ":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def laurent_subst_var(p: LaurentXY, var: str, k: int) -> LaurentXY:
    return p.subst_var(var, k)
