import pytest

from slimcount import kernels

_acceptance: dict[int, tuple[bool, str]] = {}


def pytest_report_header(config):
    return f"slimcount kernel backend: {kernels.BACKEND}"


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(number, ok, detail)``."""
    def record(number: int, ok: bool, detail: str) -> bool:
        _acceptance[number] = (ok, detail)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        ok, detail = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
