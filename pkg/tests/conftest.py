"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

_outcomes: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed or report.skipped:
        prev = _outcomes.get(name, "PASS")
        _outcomes[name] = "FAIL" if (report.failed or prev == "FAIL") else (
            "SKIP" if report.skipped else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number, (name, label) in enumerate(CRITERIA, start=1):
        status = _outcomes.get(name, "NOT RUN")
        terminalreporter.write_line(f"criterion {number} [{status}] {label}")
