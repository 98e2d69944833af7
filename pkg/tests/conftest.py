"""Collects acceptance-criterion results and prints one line each at the end."""

ACCEPTANCE_LINES = []


def record_acceptance(number: int, ok: bool, detail: str):
    ACCEPTANCE_LINES.append((number, f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
