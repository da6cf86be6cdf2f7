import pytest

_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        line = f"{'PASS' if report.passed else 'FAIL'}  {marker.args[0]}  ({report.duration:.1f}s)"
        _RESULTS.append(line)


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)
