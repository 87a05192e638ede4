"""Session fixtures shared across test modules."""

import pytest

import helpers
from helpers import corpus


@pytest.fixture(scope="session")
def corpus200():
    """200 distinct connected diagrams with at most 10 crossings, fixed seed."""
    return corpus(seed=2026, count=200, max_crossings=10)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if helpers.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
