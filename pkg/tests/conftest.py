import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record a one-line verdict for the acceptance summary."""

    def _report(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
