import math
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twopath.states import TwoPathState

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

angles = st.floats(min_value=0.0, max_value=math.pi / 2, allow_nan=False)
phases = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)


@st.composite
def pure_states(draw):
    theta = draw(angles)
    return TwoPathState(math.cos(theta), math.sin(theta), draw(phases))


def random_states(n, seed):
    """The acceptance ensemble: a = cos(theta), b = sin(theta)."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, math.pi / 2, n)
    chi = rng.uniform(0.0, 2 * math.pi, n)
    return [TwoPathState(math.cos(t), math.sin(t), c) for t, c in zip(theta, chi)]


@pytest.fixture
def balanced():
    return TwoPathState(math.sqrt(0.5), math.sqrt(0.5), math.pi / 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: int(k.split()[0][1:])):
        terminalreporter.write_line(mod.RESULTS[key])
