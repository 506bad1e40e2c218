import pytest

from hapsjam import config
from hapsjam.analytics import Scenario

# PASS/FAIL lines recorded by the acceptance module, printed in the summary
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def resolved():
    return config.resolve({})


@pytest.fixture(scope="session")
def direct_cfg(resolved):
    return config.build_scenario(resolved, scenario=Scenario.DIRECT)


@pytest.fixture(scope="session")
def relay_cfg(resolved):
    return config.build_scenario(resolved, scenario=Scenario.RELAY)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
