import pytest

ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE.append((criterion, ok, detail))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
