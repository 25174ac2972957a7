import pytest

from domramsey.generate import graphs_by_order
from domramsey.graph import Graph

ACCEPTANCE_LINES: dict = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture(scope="session")
def levels_to_7():
    """Per-order row tuples of all graphs on 1..7 vertices (index 0 is order 1)."""
    return graphs_by_order(7)


@pytest.fixture(scope="session")
def graphs_to_7(levels_to_7):
    return [Graph(order, adj) for order, level in enumerate(levels_to_7, 1) for adj in level]


@pytest.fixture(scope="session")
def levels_to_9():
    return graphs_by_order(9)
