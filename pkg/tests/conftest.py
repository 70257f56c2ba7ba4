from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qeuler.algebra import LaurentXY, PolyQ, RatQ

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
polys = st.lists(small_fracs, max_size=5).map(PolyQ)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratqs = st.builds(RatQ, polys, nonzero_polys)
nonzero_ratqs = ratqs.filter(lambda r: not r.is_zero())
laurents = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-1, 2)),
    st.builds(RatQ, polys, st.sampled_from([PolyQ([1]), PolyQ([1, 1]), PolyQ([1, 0, 1]), PolyQ([2, -1])])),
    max_size=4,
).map(LaurentXY)


# ----- acceptance summary -------------------------------------------------

_ACCEPTANCE: dict = {}


@pytest.fixture
def record():
    def _record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (title, passed, detail)
        assert passed, f"criterion {number} ({title}) failed: {detail}"
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}: {detail}")
