import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record the outcome line of an acceptance criterion."""
    def record(number, title, ok, detail):
        _ACCEPTANCE[number] = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
