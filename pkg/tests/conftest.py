from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tetrabox.loop import LoopElem
from tetrabox.ring import RingElem

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def ring_elems(draw, max_deg=5, max_pow=3):
    coeffs = draw(st.lists(small_rationals, max_size=max_deg + 1))
    return RingElem(tuple(Fraction(c) for c in coeffs), draw(st.integers(0, max_pow)), draw(st.integers(0, max_pow)))


@st.composite
def loop_elems(draw, max_deg=3, max_pow=2):
    return LoopElem(*(draw(ring_elems(max_deg, max_pow)) for _ in range(3)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record
