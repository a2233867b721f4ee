import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402

from kacreturn import cycle_system, make_space, make_transformation, point_set  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def systems(draw, max_n=12, max_den=50):
    """A random measure-preserving permutation system with per-cycle weights."""
    n = draw(st.integers(1, max_n))
    forward = draw(st.permutations(range(n)))
    weights = [None] * n
    for cyc in oracles.cycles(forward):
        den = draw(st.integers(1, max_den))
        w = Fraction(draw(st.integers(0, den)), den)
        for x in cyc:
            weights[x] = w
    space = make_space(weights)
    return space, make_transformation(space, forward)


@st.composite
def systems_with_set(draw, max_n=12, nonempty=False):
    space, T = draw(systems(max_n))
    idx = draw(st.sets(st.integers(0, space.size - 1), min_size=1 if nonempty else 0))
    return space, T, point_set(idx, space.size)


@pytest.fixture
def cycle5():
    return cycle_system(5)


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
