from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tripart.constructions import LineSet
from tripart.geometry import Axis, AxisPlane, GeneralPlane, Line, PlaneTriple

axes = st.sampled_from(list(Axis))
small_rationals = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 2]))


@st.composite
def lines(draw, coord=st.integers(0, 5)):
    return Line(draw(axes), draw(coord), draw(coord))


@st.composite
def line_sets(draw, max_size=10):
    items = draw(st.lists(lines(), max_size=max_size, unique=True))
    return LineSet(items)


@st.composite
def axis_planes(draw):
    return AxisPlane(draw(axes), draw(small_rationals))


@st.composite
def general_planes(draw):
    normal = draw(st.tuples(*[st.integers(-2, 2)] * 3).filter(any))
    return GeneralPlane(normal, draw(st.integers(-8, 8)))


planes = st.one_of(axis_planes(), general_planes())


@st.composite
def triples(draw, plane=planes):
    return PlaneTriple((draw(plane), draw(plane), draw(plane)))


# --- acceptance summary ----------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
