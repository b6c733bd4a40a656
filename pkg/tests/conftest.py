import itertools

import pytest

from dnacodes.alphabet import word_from_str

ACCEPTANCE_LINES = []


def w(text):
    return word_from_str(text)


def all_words(q, n):
    return itertools.product(range(q), repeat=n)


@pytest.fixture
def word():
    return w


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
