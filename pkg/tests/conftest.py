import pytest
from hypothesis import HealthCheck, settings

from ngpd.acceptance import Fixtures

settings.register_profile("ngpd", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ngpd")

ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def fixtures():
    return Fixtures(0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
