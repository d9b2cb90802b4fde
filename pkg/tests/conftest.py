"""Per-criterion pass/fail summary for the acceptance module."""

import pytest

_RESULTS = {}
_TITLES = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, title): acceptance criterion covered by this test"
    )


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _TITLES[number] = title
            _RESULTS.setdefault(number, {})[item.nodeid] = None


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None and (report.when == "call" or report.failed):
        number = mark.args[0]
        previous = _RESULTS[number].get(item.nodeid)
        if previous is not False:
            _RESULTS[number][item.nodeid] = report.passed
    return report


def pytest_terminal_summary(terminalreporter):
    ran = {n: r for n, r in _RESULTS.items() if any(v is not None for v in r.values())}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ran):
        outcomes = ran[number]
        failed = [nodeid.split("::")[-1] for nodeid, ok in outcomes.items() if ok is False]
        skipped = any(ok is None for ok in outcomes.values())
        status = "FAIL" if failed else ("INCOMPLETE" if skipped else "PASS")
        line = f"criterion {number:>2}: {status}  {_TITLES[number]}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
