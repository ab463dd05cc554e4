import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from spinpair.model import ModelParams

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

coupling = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)
temperature = st.floats(min_value=0.05, max_value=50, allow_nan=False, allow_infinity=False)


@st.composite
def model_params(draw):
    return ModelParams(draw(coupling), draw(coupling), draw(coupling))


def random_params(rng, n, bound=5.0):
    for j, dx, gx in rng.uniform(-bound, bound, size=(n, 3)):
        yield ModelParams(float(j), float(dx), float(gx))


def log_uniform_temps(rng, n, lo=0.05, hi=50.0):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size=n))


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20240607))


ACCEPTANCE_LINES = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    status = "PASS" if rep.passed else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title}"
    if detail:
        line += f" | {detail}"
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
