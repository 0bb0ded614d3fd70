from collections import OrderedDict

import pytest

_CRITERIA = {
    1: "table reproduction",
    2: "stretch counts",
    3: "formula/oracle equivalence",
    4: "intermediate Ext vanishing",
    5: "exactness suites",
    6: "worked example via CLI",
    7: "bijection round trip at (3,2)",
    8: "property suite",
}
_results: "OrderedDict[int, list[bool]]" = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    k = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results.setdefault(k, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        status = "PASS" if all(_results[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k} [{_CRITERIA.get(k, '')}]: {status}")
