import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered exit criterion")


def pytest_runtest_logreport(report):
    number = getattr(report, "_acceptance", None)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(number)
        ok = report.outcome == "passed"
        _acceptance[number] = (prev[0] and ok if prev else ok, report._acceptance_title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report._acceptance = marker.args[0]
        report._acceptance_title = marker.args[1]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        ok, title = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{number}: {title}")
