import pytest

from gael.corpus import a2, acceptance_corpus, cycle, fibonacci, rose

ACCEPTANCE_LINES = []


@pytest.fixture
def rose2():
    return rose(2)


@pytest.fixture
def a2_graph():
    return a2()


@pytest.fixture
def fib():
    return fibonacci()


@pytest.fixture
def cycle2():
    return cycle(2)


@pytest.fixture(scope="session")
def corpus():
    return acceptance_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
