import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewpath.table import SkewTable  # noqa: E402

SAMPLE_ROWS = [[1, 1, 0, 0], [0, 2, 2, 1], [0, 0, 1, 0]]


@pytest.fixture
def sample():
    return SkewTable.from_rows(SAMPLE_ROWS)


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "sample.tbl"
    path.write_text("3 4\n1 1 0 0\n0 2 2 1\n0 0 1 0\n")
    return path


_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def verdict():
    """Record one pass/fail line for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        _ACCEPTANCE[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
