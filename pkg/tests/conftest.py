import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the terminal summary."""

    def record(label):
        _CRITERIA[request.node.nodeid] = [label, None]

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = _CRITERIA.get(item.nodeid)
    if entry is not None and report.when == "call":
        entry[1] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in sorted(_CRITERIA.values()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
