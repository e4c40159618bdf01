from __future__ import annotations

import pytest

# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(n: int, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[n] = (passed, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[n]
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {tag}" + (f"  ({detail})" if detail else ""))
