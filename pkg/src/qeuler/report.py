"""Outcome records for identity checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Tuple

from .algebra import LaurentXY

EXACT_ZERO = "exact-zero"
NONZERO = "nonzero"

IDENTITIES = ("THM21", "THM22", "THM24", "PROP23", "EQ13", "EQ17", "EQ5", "LIMIT")


class ParityError(ValueError):
    """An even a or b was passed to a check that needs both odd."""


@dataclass(frozen=True)
class VerificationReport:
    """Result of checking one identity at one parameter point.

    ``deviation`` is ``EXACT_ZERO`` for an exact match, ``NONZERO`` (with a
    witness term) for a failed symbolic check, a Fraction for exact scalar
    checks, or an mpf for numeric checks.  Numeric reports record the bound
    they were judged against under the ``certified_bound`` parameter.
    """

    identity_id: str
    params: Tuple[Tuple[str, Any], ...]
    mode: str
    passed: bool
    deviation: Any
    witness: Optional[Any] = None

    def param(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default


def require_odd(a: int, b: int, allow_even: bool) -> None:
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive integers")
    if not allow_even and (a % 2 == 0 or b % 2 == 0):
        raise ParityError(f"a and b must both be odd (got a={a}, b={b}); use the override to probe")


def laurent_report(identity_id: str, params, difference, extra_witness=None) -> VerificationReport:
    """Symbolic report from a difference of two sides (a LaurentXY)."""
    if difference.is_zero():
        return VerificationReport(identity_id, tuple(params), "symbolic", True, EXACT_ZERO)
    (ex, ey), c = difference.items()[0]
    witness = {"term": LaurentXY.monomial(ex, ey, c), "nonzero_terms": len(difference)}
    if extra_witness:
        witness.update(extra_witness)
    return VerificationReport(identity_id, tuple(params), "symbolic", False, NONZERO, witness)
