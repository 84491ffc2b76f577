import math

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from surfchar.triangles import in_octahedron, in_tetrahedron

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")

PI = math.pi

angles = st.floats(0.0, PI, allow_nan=False)
real_angles = st.floats(-20.0, 20.0, allow_nan=False)


@st.composite
def unit_vectors(draw):
    v = np.array([draw(st.floats(-1.0, 1.0)) for _ in range(3)])
    n = float(np.linalg.norm(v))
    if n < 1e-3:
        v, n = np.array([0.0, 0.0, 1.0]), 1.0
    return v / n


@st.composite
def interior_g(draw, margin=1e-3):
    t = draw(st.tuples(angles, angles, angles))
    if not in_tetrahedron(t, margin):
        # fold into G: the centroid pull keeps the distribution broad
        t = tuple(0.5 * x + 0.25 * PI for x in t)
    if not in_tetrahedron(t, margin):
        t = (PI / 2, PI / 2, PI / 2)
    return t


@st.composite
def interior_o(draw, margin=1e-3):
    t = draw(interior_g(margin))
    if not in_octahedron(t, margin):
        t = tuple(0.5 * x + 0.25 * PI for x in t)
    if not in_octahedron(t, margin):
        t = (PI / 2, PI / 2, PI / 2)
    return t


def pasting(modulus):
    return st.tuples(*(st.floats(0.0, modulus, exclude_max=True) for _ in range(3)))


# acceptance lines, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
