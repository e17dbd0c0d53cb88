import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.skipped):
        return
    if "test_acceptance" in report.nodeid:
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _acceptance_results.append((report.nodeid.split("::")[-1], status))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _acceptance_results:
        terminalreporter.write_line(f"[{status}] {name}")
