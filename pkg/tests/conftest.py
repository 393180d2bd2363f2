import numpy as np
import pytest

QUBIT = np.array([[0.7, 0.2], [0.2, 0.3]])
QUTRIT = np.array([[0.5, 0.1, 0], [0.1, 0.3, 0.1], [0, 0.1, 0.2]])

_ACCEPTANCE = []


@pytest.fixture
def rng():
    return np.random.default_rng(20231016)


@pytest.fixture
def record_criterion():
    def record(name, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {name}" + (f"  ({detail})" if detail else "")
        print(line)
        _ACCEPTANCE.append(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
