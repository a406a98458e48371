import numpy as np
import pytest
from hypothesis import strategies as st

from udw import XState

deltas = st.floats(-3.0, 1.0, allow_nan=False)
gammas = st.floats(0.0, 1.0, allow_nan=False)


@st.composite
def x_states(draw, symmetric=False):
    """Physical X states with arbitrary populations and coherence."""
    w = [draw(st.floats(1e-6, 1.0)) for _ in range(4)]
    if symmetric:
        w[2] = w[1]
    total = sum(w)
    p = [x / total for x in w]
    r23 = draw(st.floats(-1.0, 1.0)) * np.sqrt(p[1] * p[2])
    return XState(*p, float(r23))


@pytest.fixture
def rng():
    return np.random.default_rng(7)


# --- acceptance report ---------------------------------------------------------
# test_acceptance.py appends one line per criterion; they are echoed after the
# run so they survive output capturing.

import time

ACCEPTANCE_LINES: dict[int, str] = {}
SESSION_START = time.perf_counter()
FULL_SUITE_BUDGET = 300.0


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - SESSION_START
    status = "PASS" if elapsed < FULL_SUITE_BUDGET else "FAIL"
    ACCEPTANCE_LINES[11] = (
        f"{status} [11] full suite incl. CLI figure regeneration: {elapsed:.1f} s "
        f"(budget {FULL_SUITE_BUDGET:.0f} s)"
    )
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
