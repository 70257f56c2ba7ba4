"""Exact q-Euler numbers and polynomials, certified q-Euler zeta values and
machine checks of their symmetric identities."""
from __future__ import annotations

from .algebra import (
    BigRat,
    LaurentXY,
    PoleError,
    PolyQ,
    RatQ,
    laurent_arith,
    laurent_subst_var,
    ratq_arith,
    ratq_eval,
    ratq_make,
    ratq_subst_power,
)
from .core import (
    ArgMonomial,
    addition_theorem_expand,
    classical_euler,
    euler_number,
    euler_number_series_oracle,
    euler_numbers,
    euler_poly_eval,
    euler_poly_symbolic,
    q_bracket_int,
    q_bracket_symbolic,
    q_limit_check,
)
from .report import ParityError, VerificationReport
from .verify import (
    s_star,
    verify_eq13,
    verify_eq17,
    verify_prop23,
    verify_thm22,
    verify_thm24,
)
from .zeta import interpolation_check, thm21_check, zeta_eval

__version__ = "0.1.0"
