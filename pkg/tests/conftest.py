import pytest

from hanabi.cnf import CnfFormula
from hanabi.core import Instance


def deck(pairs, h, **params):
    return Instance.from_pairs(pairs, h=h, **params)


@pytest.fixture
def worked_formula():
    """(x1 or not x2 or x3) and (x1 or x2 or not x3)."""
    return CnfFormula(3, ((1, -2, 3), (1, 2, -3)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
