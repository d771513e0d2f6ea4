import os

import pytest
from hypothesis import HealthCheck, settings

from ternary_codes.field import make_field

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 3)


@pytest.fixture(scope="session")
def f5():
    return make_field(3, 5)


@pytest.fixture(scope="session")
def f7():
    return make_field(3, 7)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
