from fractions import Fraction

import pytest
from hypothesis import strategies as st

ACCEPTANCE_LINES: list[str] = []


def sizes(max_den=64):
    return st.builds(lambda d, k: Fraction(k, d), st.just(max_den), st.integers(1, max_den))


def sequences(max_n=10, max_den=64):
    return st.lists(sizes(max_den), max_size=max_n).map(tuple)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def F():
    return Fraction
