import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("pasts", max_examples=60, deadline=None)
settings.load_profile("pasts")

# one line per acceptance criterion, echoed again in the terminal summary
CRITERIA_LINES: list[str] = []


@pytest.fixture
def report():
    def _report(number: int, title: str, passed: bool, detail: str):
        line = f"CRITERION {number:>2} {'PASS' if passed else 'FAIL'}: {title} | {detail}"
        print(line)
        CRITERIA_LINES.append(line)
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(7)
