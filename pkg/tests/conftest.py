import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from simplex_absorption import Simplex
from simplex_absorption.errors import DegenerateSimplex

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def simplices(draw, min_n=1, max_n=5, scale=3.0):
    """Non-degenerate, reasonably conditioned float simplices."""
    n = draw(st.integers(min_n, max_n))
    coords = st.floats(-scale, scale, allow_nan=False, allow_infinity=False)
    verts = draw(st.lists(st.lists(coords, min_size=n, max_size=n), min_size=n + 1, max_size=n + 1))
    verts = np.array(verts)
    edges = verts[1:] - verts[0]
    sv = np.linalg.svd(edges, compute_uv=False)
    from hypothesis import assume
    assume(sv[-1] > 0.05 * max(1.0, sv[0]))
    try:
        return Simplex(verts)
    except DegenerateSimplex:
        assume(False)


@pytest.fixture
def std2():
    return Simplex([[0, 0], [1, 0], [0, 1]])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
