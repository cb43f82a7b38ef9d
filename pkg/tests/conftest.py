import pytest

_LINES: dict[int, str] = {}


class AcceptanceLog:
    def record(self, number: int, passed: bool, detail: str) -> bool:
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:>2}: {status}  {detail}"
        _LINES[number] = line
        print(line)
        return passed


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
