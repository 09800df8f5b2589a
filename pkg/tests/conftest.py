import time

import pytest

from polyforge.toroidal import TorusParams, build_torus_group

_CRITERIA: list[str] = []


class Criterion:
    """Times a block and records one PASS/FAIL line for the summary."""

    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t
        ok = exc_type is None and dt < self.budget
        line = (f"[{'PASS' if ok else 'FAIL'}] criterion {self.number:>2}: {self.title} "
                f"({dt:.2f}s, budget {self.budget}s)")
        _CRITERIA.append(line)
        print("\n" + line)
        if exc_type is None:
            assert dt < self.budget, f"criterion {self.number} over budget: {dt:.1f}s"
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def t20():
    return build_torus_group(TorusParams(2, 0))


@pytest.fixture(scope="session")
def t22():
    return build_torus_group(TorusParams(2, 2))
