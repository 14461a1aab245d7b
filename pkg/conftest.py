"""Session-wide pytest hooks.

Collects the outcome of every numbered acceptance test (primary suite and
the plotting package's) and prints one PASS/FAIL line per criterion at the
end of the run.
"""

import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results: dict[int, bool] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    match = _CRITERION.search(item.name)
    if match:
        _results[int(match.group(1))] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        status = "PASS" if _results[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}")
