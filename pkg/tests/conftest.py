import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def _report(number: int, text: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
