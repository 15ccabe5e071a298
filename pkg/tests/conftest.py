"""Shared pytest wiring: the acceptance summary block.

The acceptance tests append one line per release criterion to
ACCEPTANCE_LINES; printing them from the terminal-summary hook keeps them
visible in the run log even though output inside tests is captured.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
