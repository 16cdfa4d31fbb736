"""Show the acceptance scoreboard even when capture hides per-test output."""

scoreboard = []


def pytest_terminal_summary(terminalreporter):
    if not scoreboard:
        return
    terminalreporter.section("acceptance scoreboard")
    for line in scoreboard:
        terminalreporter.write_line(line)
