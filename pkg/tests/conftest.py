import pytest

from forcebrush.corpus import bundled_corpus


@pytest.fixture(scope="session")
def all_small():
    """Every graph on 1..6 vertices, one per isomorphism class."""
    return bundled_corpus("all_n1-6")


@pytest.fixture(scope="session")
def connected_small():
    """Every connected graph on 2..6 vertices."""
    return bundled_corpus("connected_n2-6")


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line for the acceptance summary."""
    def record(criterion: str, passed: bool, detail: str):
        line = f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
