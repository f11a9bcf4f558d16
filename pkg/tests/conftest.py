import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def report(criterion: int, passed: bool | None, detail: str) -> None:
        status = "EXCLUDED" if passed is None else ("PASS" if passed else "FAIL")
        ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {status}  {detail}")
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
