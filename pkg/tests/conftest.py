from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")

COUPLINGS = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def weights_up_to(h):
    return [(p, q) for p in range(h + 1) for q in range(h + 1 - p)]


@pytest.fixture(scope="session")
def pascal_rows():
    """Pascal's triangle by repeated addition, rows 0..60."""
    rows = [[1]]
    for _ in range(60):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


_ACCEPTANCE = []


@pytest.fixture
def acceptance(request):
    """Call with (criterion_id, description, passed, seconds) to log one result line."""

    def record(cid, text, passed, seconds):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {cid}: {text} ({seconds:.2f} s)"
        _ACCEPTANCE.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
