import pytest

from helpers import powerset_algebra


@pytest.fixture
def boolean_2():
    return powerset_algebra(["p", "q"])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
