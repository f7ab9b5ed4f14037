import pytest

from gion import geometry

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def k():
    return geometry.constants()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
