import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def example1_row():
    from padovan_codec import CodedRow

    return CodedRow(2208, (11, 8, 15, 15, 3, 4, 15, 4))


_ACCEPTANCE = []


def record_criterion(label, passed):
    _ACCEPTANCE.append((label, passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
