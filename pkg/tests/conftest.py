import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[m.group(1)] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _acceptance.items():
        crit, _, label = name.partition("_")
        terminalreporter.write_line(f"{verdict}  criterion {crit}: {label.replace('_', ' ')}")
